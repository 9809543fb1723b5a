#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regmap/map.hpp"
#include "regmap/rational.hpp"

namespace regmap {

struct DensityReport {
  Rational density;
  int q = 0;
  int vertex_count = 0;
  std::vector<int> per_vertex_neighbor_counts;
};

// |boundary of the unit ball| / |V|, exact and checked for every vertex.
DensityReport density(const RegularMap& m);

// (closed ball, sphere) of the given radius around v, as sorted vertex sets.
std::pair<std::vector<int>, std::vector<int>> neighborhood(const Graph& g, int v, int radius);

int diameter(const Graph& g);

// Vertices of the form S_w^2(v) for w a neighbor of v; requires p = 3.
std::vector<int> diagonal_neighbors(const RegularMap& m, int v);

// Partition of the vertices into diagonal-alignment classes (the transitive
// closure of the diagonal-neighbor relation) together with the primitive
// period j (least j in 1..q with S_v^j fixing the class of v pointwise) and
// the even period lcm(j, 2).
struct AlignmentData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  int primitive_period = 0;
  int even_period = 0;
};

AlignmentData diagonal_alignment(const RegularMap& m);

int primitive_period(const RegularMap& m);
int even_period(const RegularMap& m);

// If S_v^j fixes v2, the exponent multiplier k with S_v^j = S_{v2}^{k j}
// (well-defined and invertible modulo q/gcd(j, q)); empty otherwise.
std::optional<int> rotation_transfer(const RegularMap& m, int v, int v2, int j);

struct LemmaCheck {
  std::string id;
  bool applicable = false;
  bool passed = false;
  std::string witness;  // counterexample data when failed
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool has_failures() const;
  std::vector<std::string> failure_ids() const;
};

struct LemmaOptions {
  // 0 = run quantified checks exhaustively; otherwise cap each vertex-pair
  // loop at this many deterministically sampled pairs.
  std::size_t sample_limit = 0;
};

// Property harness over the structural facts that hold for reflexive
// regular maps with simple graphs of density above 1/2. Each check records
// whether its hypotheses applied and, if so, whether it passed.
LemmaReport lemma_suite(const RegularMap& m, const LemmaOptions& options = {});

}  // namespace regmap
