#include "regmap/census.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "regmap/errors.hpp"
#include "regmap/parse.hpp"

namespace regmap {

namespace {

const std::vector<std::string> kMapGenerators = {"R", "S"};

[[noreturn]] void record_error(const std::string& msg, int line) {
  throw SyntaxError(msg, line, 1);
}

std::string expect_field(const std::string& token, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) {
    record_error("expected field '" + key + "', got '" + token + "'", line);
  }
  return token.substr(prefix.size());
}

long long parse_int(const std::string& text, const std::string& key, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    record_error("field '" + key + "' is not an integer: '" + text + "'", line);
  }
}

}  // namespace

std::vector<CensusRecord> parse_census(std::istream& in) {
  std::vector<CensusRecord> records;
  std::unordered_set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string tok;
    CensusRecord r;

    fields >> tok;
    r.id = expect_field(tok, "id", lineno);
    if (r.id.empty()) record_error("empty id", lineno);

    if (!(fields >> tok)) record_error("missing field 'genus'", lineno);
    r.genus = static_cast<int>(parse_int(expect_field(tok, "genus", lineno), "genus", lineno));
    if (r.genus < 0) record_error("genus must be non-negative", lineno);

    if (!(fields >> tok)) record_error("missing field 'type'", lineno);
    {
      const std::string v = expect_field(tok, "type", lineno);
      int p = 0, q = 0;
      char open = 0, comma = 0, close = 0;
      std::istringstream ts(v);
      if (!(ts >> open >> p >> comma >> q >> close) || open != '{' || comma != ',' ||
          close != '}' || ts.peek() != EOF) {
        record_error("type must look like {p,q}: '" + v + "'", lineno);
      }
      if (p < 1 || q < 1) record_error("type components must be positive", lineno);
      r.p = p;
      r.q = q;
    }

    if (!(fields >> tok)) record_error("missing field 'order'", lineno);
    r.rotation_order = parse_int(expect_field(tok, "order", lineno), "order", lineno);
    if (r.rotation_order < 1) record_error("order must be positive", lineno);

    if (!(fields >> tok)) record_error("missing field 'chiral'", lineno);
    {
      const std::string v = expect_field(tok, "chiral", lineno);
      if (v == "true") {
        r.chiral = true;
      } else if (v == "false") {
        r.chiral = false;
      } else {
        record_error("chiral must be true or false: '" + v + "'", lineno);
      }
    }

    if (!(fields >> tok)) record_error("missing field 'rels'", lineno);
    {
      const std::string v = expect_field(tok, "rels", lineno);
      std::size_t start = 0;
      while (start <= v.size()) {
        const std::size_t semi = v.find(';', start);
        const std::string word_text =
            v.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (word_text.empty()) record_error("empty relator in record '" + r.id + "'", lineno);
        try {
          Word w = parse_word(word_text, kMapGenerators);
          if (w.empty()) record_error("relator reduces to the empty word", lineno);
          r.relators.push_back(std::move(w));
        } catch (const SyntaxError& e) {
          record_error("record '" + r.id + "': " + e.what(), lineno);
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
    }

    if (fields >> tok) record_error("unexpected trailing field '" + tok + "'", lineno);
    if (!ids.insert(r.id).second) throw DuplicateIdError(r.id);
    records.push_back(std::move(r));
  }
  return records;
}

std::string to_line(const CensusRecord& r) {
  std::string out = "id=" + r.id + " genus=" + std::to_string(r.genus) + " type={" +
                    std::to_string(r.p) + "," + std::to_string(r.q) + "} order=" +
                    std::to_string(r.rotation_order) + " chiral=" +
                    (r.chiral ? "true" : "false") + " rels=";
  for (std::size_t i = 0; i < r.relators.size(); ++i) {
    if (i > 0) out += ';';
    out += to_string(r.relators[i], kMapGenerators);
  }
  return out;
}

void write_census(const std::vector<CensusRecord>& records, std::ostream& out) {
  for (const CensusRecord& r : records) out << to_line(r) << '\n';
}

RegularMap record_to_map(const CensusRecord& record, std::size_t max_cosets) {
  Presentation p;
  p.generators = kMapGenerators;
  p.relators = record.relators;
  RegularMap m = build_map(p, max_cosets);

  const auto mismatch = [&](const char* field, long long declared, long long computed) {
    throw DeclarationMismatchError(field, std::to_string(declared), std::to_string(computed));
  };
  if (m.order() != record.rotation_order) mismatch("order", record.rotation_order, m.order());
  if (m.face_size() != record.p) mismatch("p", record.p, m.face_size());
  if (m.vertex_degree() != record.q) mismatch("q", record.q, m.vertex_degree());
  const int g = genus(m);
  if (g != record.genus) mismatch("genus", record.genus, g);
  const bool chiral = !is_reflexive(m);
  if (chiral != record.chiral) {
    throw DeclarationMismatchError("chiral", record.chiral ? "true" : "false",
                                   chiral ? "true" : "false");
  }
  return m;
}

void write_report(const std::vector<MapSummary>& summaries, ReportFormat format,
                  std::ostream& out) {
  if (summaries.empty()) return;
  if (format == ReportFormat::JsonLines) {
    for (const MapSummary& s : summaries) {
      nlohmann::json j;
      j["id"] = s.id;
      j["order"] = s.order;
      j["p"] = s.p;
      j["q"] = s.q;
      j["genus"] = s.genus;
      j["simple"] = s.simple;
      j["reflexive"] = s.reflexive;
      j["density"] = s.density.str();
      j["classification"] = s.classification.str();
      j["lemma_failures"] = s.lemma_failures;
      out << j.dump() << '\n';
    }
  } else {
    out << "id,order,p,q,genus,simple,reflexive,density,classification,lemma_failures\n";
    for (const MapSummary& s : summaries) {
      std::string failures;
      for (std::size_t i = 0; i < s.lemma_failures.size(); ++i) {
        if (i > 0) failures += ';';
        failures += s.lemma_failures[i];
      }
      out << s.id << ',' << s.order << ',' << s.p << ',' << s.q << ',' << s.genus << ','
          << (s.simple ? "true" : "false") << ',' << (s.reflexive ? "true" : "false") << ','
          << s.density.str() << ',' << s.classification.str() << ',' << failures << '\n';
    }
  }
  if (!out) throw IoError("failed to write report");
}

}  // namespace regmap
