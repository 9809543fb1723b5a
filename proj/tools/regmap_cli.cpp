// Command-line front end: analyze presentations, construct Fermat maps,
// validate census files against the density classification, build
// quotients, and run the lemma property checks.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "regmap/analysis.hpp"
#include "regmap/census.hpp"
#include "regmap/errors.hpp"
#include "regmap/fermat.hpp"
#include "regmap/parse.hpp"
#include "regmap/quotient.hpp"
#include "regmap/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

std::size_t resolve_max_cosets(std::optional<std::size_t> cli_value) {
  if (cli_value) return *cli_value;
  if (const char* env = std::getenv("REGMAP_MAX_COSETS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw regmap::Error("REGMAP_MAX_COSETS is not a number: " + std::string(env));
    }
  }
  return regmap::kDefaultMaxCosets;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw regmap::IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

regmap::ReportFormat parse_format(const std::string& name) {
  if (name == "json") return regmap::ReportFormat::JsonLines;
  if (name == "csv") return regmap::ReportFormat::Csv;
  throw regmap::Error("unknown format '" + name + "' (expected json or csv)");
}

int run_analyze(const std::string& path, std::optional<std::size_t> max_cosets,
                const std::string& format) {
  const auto presentation = regmap::parse_presentation(read_file(path));
  const auto map = regmap::build_map(presentation, resolve_max_cosets(max_cosets));
  const auto summary = regmap::analyze_map(file_stem(path), map);
  regmap::write_report({summary}, parse_format(format), std::cout);
  return kExitOk;
}

int run_fermat(int n) {
  const auto report = regmap::verify_fermat(n);
  std::cout << regmap::to_json(report) << '\n';
  return report.pass ? kExitOk : kExitViolations;
}

int run_census_verify(const std::string& path, std::optional<std::size_t> max_cosets,
                      const std::string& format, unsigned jobs, std::size_t sample_large) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw regmap::IoError("cannot open " + path);
  const auto records = regmap::parse_census(in);
  const std::size_t bound = resolve_max_cosets(max_cosets);
  const regmap::LemmaOptions lemma_options{sample_large};

  std::vector<regmap::MapSummary> summaries(records.size());
  std::vector<std::string> errors(records.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1)) {
      try {
        const auto map = regmap::record_to_map(records[i], bound);
        summaries[i] = regmap::analyze_map(records[i].id, map, lemma_options);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<regmap::MapSummary> ok;
  int mismatches = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (errors[i].empty()) {
      ok.push_back(summaries[i]);
    } else {
      ++mismatches;
      std::cerr << "record " << records[i].id << ": " << errors[i] << '\n';
    }
  }
  regmap::write_report(ok, parse_format(format), std::cout);

  const auto theorem = regmap::verify_density_theorem(ok);
  std::cerr << "maps=" << theorem.total << " high_density=" << theorem.high_density_count
            << " violations=" << theorem.violations.size()
            << " lemma_failures=" << theorem.lemma_failures.size()
            << " mismatches=" << mismatches << '\n';
  for (const auto& id : theorem.violations) std::cerr << "violation: " << id << '\n';
  for (const auto& [id, check] : theorem.lemma_failures) {
    std::cerr << "lemma failure: " << id << " " << check << '\n';
  }
  return (theorem.ok() && mismatches == 0) ? kExitOk : kExitViolations;
}

int run_quotient(const std::string& path, const std::string& subgroup_arg,
                 std::optional<std::size_t> max_cosets) {
  const auto presentation = regmap::parse_presentation(read_file(path));
  const std::size_t bound = resolve_max_cosets(max_cosets);
  const auto map = regmap::build_map(presentation, bound);

  std::vector<regmap::Word> words;
  std::size_t start = 0;
  while (start <= subgroup_arg.size()) {
    const std::size_t semi = subgroup_arg.find(';', start);
    const std::string text = subgroup_arg.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!text.empty()) words.push_back(regmap::parse_word(text, presentation.generators));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (words.empty()) throw regmap::Error("--subgroup needs at least one word");

  const auto h = regmap::subgroup_closure(map, words);
  const auto quotient = regmap::quotient_map(map, h, bound);
  const auto orbits = regmap::cell_orbit_counts(map, h);

  nlohmann::json j;
  j["subgroup_order"] = h.order();
  j["orbit_counts"] = {{"vertices", orbits.vertices}, {"edges", orbits.edges},
                       {"faces", orbits.faces}};
  const auto summary = regmap::analyze_map(file_stem(path) + "/H", quotient);
  j["quotient"] = {{"id", summary.id},
                   {"order", summary.order},
                   {"p", summary.p},
                   {"q", summary.q},
                   {"genus", summary.genus},
                   {"simple", summary.simple},
                   {"reflexive", summary.reflexive},
                   {"density", summary.density.str()},
                   {"classification", summary.classification.str()}};
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_lemmas(const std::string& path, std::optional<std::size_t> max_cosets,
               std::size_t sample_large) {
  const auto presentation = regmap::parse_presentation(read_file(path));
  const auto map = regmap::build_map(presentation, resolve_max_cosets(max_cosets));
  const auto report = regmap::lemma_suite(map, {sample_large});
  for (const auto& check : report.checks) {
    nlohmann::json j;
    j["id"] = check.id;
    j["applicable"] = check.applicable;
    j["passed"] = check.passed;
    j["witness"] = check.witness;
    std::cout << j.dump() << '\n';
  }
  return report.has_failures() ? kExitViolations : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular map construction and verification"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_cosets;
  std::string format = "json";
  std::string path;
  std::string subgroup_arg;
  int fermat_n = 1;
  unsigned jobs = 1;
  std::size_t sample_large = 0;

  auto* analyze = app.add_subcommand("analyze", "analyze a presentation file");
  analyze->add_option("file", path, "presentation file")->required();
  analyze->add_option("--max-cosets", max_cosets, "enumeration bound");
  analyze->add_option("--format", format, "json|csv");

  auto* fermat = app.add_subcommand("fermat", "verify the degree-n Fermat map");
  fermat->add_option("n", fermat_n, "degree")->required()->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census-verify", "validate a census file");
  census->add_option("file", path, "census file")->required();
  census->add_option("--jobs", jobs, "worker threads");
  census->add_option("--format", format, "json|csv");
  census->add_option("--sample-large", sample_large,
                     "cap quantified lemma checks at this many sampled pairs");
  census->add_option("--max-cosets", max_cosets, "enumeration bound");

  auto* quotient = app.add_subcommand("quotient", "quotient by a normal subgroup");
  quotient->add_option("file", path, "presentation file")->required();
  quotient->add_option("--subgroup", subgroup_arg, "semicolon-separated generator words")
      ->required();
  quotient->add_option("--max-cosets", max_cosets, "enumeration bound");

  auto* lemmas = app.add_subcommand("lemmas", "run the lemma property checks");
  lemmas->add_option("file", path, "presentation file")->required();
  lemmas->add_option("--max-cosets", max_cosets, "enumeration bound");
  lemmas->add_option("--sample-large", sample_large,
                     "cap quantified lemma checks at this many sampled pairs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(path, max_cosets, format);
    if (*fermat) return run_fermat(fermat_n);
    if (*census) return run_census_verify(path, max_cosets, format, jobs, sample_large);
    if (*quotient) return run_quotient(path, subgroup_arg, max_cosets);
    if (*lemmas) return run_lemmas(path, max_cosets, sample_large);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
