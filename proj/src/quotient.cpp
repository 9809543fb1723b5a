#include "regmap/quotient.hpp"

#include <algorithm>
#include <numeric>

#include "regmap/errors.hpp"

namespace regmap {

bool Subgroup::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

Subgroup subgroup_closure(const RegularMap& m, const std::vector<Word>& generator_words) {
  const GroupTable& t = m.group();
  std::vector<int> gens;
  for (const Word& w : generator_words) gens.push_back(t.element_of_word(w));

  std::vector<bool> seen(t.order(), false);
  std::vector<int> frontier{0};
  seen[0] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (int g : gens) {
      const int next = t.multiply(frontier[head], g);
      if (!seen[next]) {
        seen[next] = true;
        frontier.push_back(next);
      }
    }
  }
  Subgroup h;
  h.generator_words = generator_words;
  for (int e = 0; e < t.order(); ++e) {
    if (seen[e]) h.elements.push_back(e);
  }
  return h;
}

bool is_normal_in_aut(const RegularMap& m, const Subgroup& h) {
  const GroupTable& t = m.group();
  for (int g = 0; g < t.order(); ++g) {
    const int gi = t.inverse(g);
    for (int e : h.elements) {
      if (!h.contains(t.multiply(t.multiply(g, e), gi))) return false;
    }
  }
  if (is_reflexive(m)) {
    for (int e : h.elements) {
      std::vector<Letter> flipped;
      for (Letter l : t.word_of(e).letters()) flipped.push_back(inverse_letter(l));
      if (!h.contains(t.element_of_word(Word(std::move(flipped))))) return false;
    }
  }
  return true;
}

bool reverses_some_edge(const RegularMap& m, const Subgroup& h) {
  const GroupTable& t = m.group();
  for (int g = 0; g < t.order(); ++g) {
    if (h.contains(t.multiply(t.multiply(g, m.edge_flip()), t.inverse(g)))) return true;
  }
  return false;
}

namespace {

int orbit_count(const GroupTable& t, const Subgroup& h, const std::vector<int>& cell_of,
                const std::vector<std::vector<int>>& members) {
  const int n = static_cast<int>(members.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int c = 0; c < n; ++c) {
    if (seen[c]) continue;
    ++count;
    for (int e : h.elements) {
      seen[cell_of[t.multiply(e, members[c][0])]] = true;
    }
  }
  return count;
}

}  // namespace

CellOrbitCounts cell_orbit_counts(const RegularMap& m, const Subgroup& h) {
  const CellStructure& cells = m.cells();
  return {orbit_count(m.group(), h, cells.vertex_of, cells.vertex_members),
          orbit_count(m.group(), h, cells.edge_of, cells.edge_members),
          orbit_count(m.group(), h, cells.face_of, cells.face_members)};
}

RegularMap quotient_map(const RegularMap& m, const Subgroup& h, std::size_t max_cosets) {
  if (reverses_some_edge(m, h)) throw ReversesEdgeError();
  if (!is_normal_in_aut(m, h)) throw NotNormalError();
  Presentation p = m.presentation();
  for (const Word& w : h.generator_words) {
    if (!w.empty()) p.relators.push_back(w);
  }
  return build_map(p, max_cosets);
}

}  // namespace regmap
