#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regmap/map.hpp"
#include "regmap/verifier.hpp"

namespace regmap {

// One census entry. `rotation_order` is the order of the orientation
// preserving automorphism group (the full group is twice that for
// reflexive maps). All declared fields are validated against the map the
// relators actually define, never trusted.
struct CensusRecord {
  std::string id;
  int genus = 0;
  int p = 0;
  int q = 0;
  long long rotation_order = 0;
  bool chiral = false;
  std::vector<Word> relators;  // over the generators R, S

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Record format, one logical record per line ('#' starts a comment):
//   id=<string> genus=<int> type={<p>,<q>} order=<int> chiral=<true|false>
//   rels=<relator>(;<relator>)*
std::vector<CensusRecord> parse_census(std::istream& in);
void write_census(const std::vector<CensusRecord>& records, std::ostream& out);

std::string to_line(const CensusRecord& record);

// Builds the map from the record's relators and checks every declared
// field against the computed value.
RegularMap record_to_map(const CensusRecord& record,
                         std::size_t max_cosets = kDefaultMaxCosets);

enum class ReportFormat { JsonLines, Csv };

// One output record per map summary: id, order, p, q, genus, simple,
// reflexive, density (as "num/den"), classification, lemma failures.
void write_report(const std::vector<MapSummary>& summaries, ReportFormat format,
                  std::ostream& out);

}  // namespace regmap
