#pragma once

#include <string>
#include <vector>

#include "regmap/analysis.hpp"
#include "regmap/map.hpp"

namespace regmap {

struct MapSummary {
  std::string id;
  int order = 0;
  int p = 0;
  int q = 0;
  int genus = 0;
  bool simple = false;
  bool reflexive = false;
  Rational density;
  Classification classification;
  std::vector<std::string> lemma_failures;

  bool high_density() const {
    return simple && reflexive && density > Rational(1, 2);
  }
};

MapSummary analyze_map(const std::string& id, const RegularMap& m,
                       const LemmaOptions& options = {});

// Result of checking the density classification over a batch of maps: a
// simple reflexive map of density above 1/2 must classify as the
// tetrahedron or a Fermat map; anything else is a violation.
struct TheoremReport {
  int total = 0;
  int high_density_count = 0;
  std::vector<MapSummary> summaries;
  std::vector<std::string> violations;  // ids of high-density maps classified "other"
  std::vector<std::pair<std::string, std::string>> lemma_failures;  // (map id, check id)

  bool ok() const { return violations.empty() && lemma_failures.empty(); }
};

TheoremReport verify_density_theorem(const std::vector<MapSummary>& summaries);

}  // namespace regmap
