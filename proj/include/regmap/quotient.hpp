#pragma once

#include <vector>

#include "regmap/map.hpp"

namespace regmap {

// A subgroup of the rotation group, closed under multiplication and
// inverse, remembering the words that generated it so a quotient
// presentation can be formed by appending them as relators.
struct Subgroup {
  std::vector<int> elements;  // sorted
  std::vector<Word> generator_words;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int e) const;
};

// Smallest subgroup containing the elements of the given words.
Subgroup subgroup_closure(const RegularMap& m, const std::vector<Word>& generator_words);

// Normality in the full automorphism group: closure under conjugation by
// every rotation and, when the map is reflexive, under the generator
// inverting automorphism.
bool is_normal_in_aut(const RegularMap& m, const Subgroup& h);

// Whether h meets the conjugacy set of R*S, i.e. contains an automorphism
// reversing some edge.
bool reverses_some_edge(const RegularMap& m, const Subgroup& h);

struct CellOrbitCounts {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

// Orbit counts of h acting on the cells of m (the cell counts a quotient
// by h must reproduce).
CellOrbitCounts cell_orbit_counts(const RegularMap& m, const Subgroup& h);

// Quotient map built by appending h's generator words to the presentation
// and re-enumerating. Requires h normal in Aut and reversing no edge.
RegularMap quotient_map(const RegularMap& m, const Subgroup& h,
                        std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace regmap
