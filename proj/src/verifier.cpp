#include "regmap/verifier.hpp"

namespace regmap {

MapSummary analyze_map(const std::string& id, const RegularMap& m, const LemmaOptions& options) {
  MapSummary s;
  s.id = id;
  s.order = m.order();
  s.p = m.face_size();
  s.q = m.vertex_degree();
  s.genus = genus(m);
  s.simple = is_simple(m);
  s.reflexive = is_reflexive(m);
  s.density = density(m).density;
  s.classification = classify(m);
  s.lemma_failures = lemma_suite(m, options).failure_ids();
  return s;
}

TheoremReport verify_density_theorem(const std::vector<MapSummary>& summaries) {
  TheoremReport report;
  report.total = static_cast<int>(summaries.size());
  report.summaries = summaries;
  for (const MapSummary& s : summaries) {
    if (!s.high_density()) continue;
    ++report.high_density_count;
    if (s.classification.tag == ClassificationTag::Other) {
      report.violations.push_back(s.id);
    }
    for (const std::string& check : s.lemma_failures) {
      report.lemma_failures.emplace_back(s.id, check);
    }
  }
  return report;
}

}  // namespace regmap
