#include "regmap/map.hpp"

#include <algorithm>

#include "regmap/errors.hpp"

namespace regmap {

namespace {

// Partition the elements into orbits of right multiplication by the cyclic
// group generated by `step`, sweeping in index order so cell ids are
// deterministic.
void build_cells(const GroupTable& t, const Word& step, std::vector<int>& cell_of,
                 std::vector<std::vector<int>>& members) {
  const int n = t.order();
  cell_of.assign(n, -1);
  members.clear();
  for (int g = 0; g < n; ++g) {
    if (cell_of[g] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    int x = g;
    do {
      cell_of[x] = id;
      members.back().push_back(x);
      x = t.apply_word(x, step);
    } while (x != g);
  }
}

}  // namespace

std::string Classification::str() const {
  switch (tag) {
    case ClassificationTag::Tetrahedron: return "tetrahedron";
    case ClassificationTag::Fermat: return "fermat(" + std::to_string(fermat_n) + ")";
    case ClassificationTag::Other: return "other";
  }
  return "other";
}

Word RegularMap::vertex_rotation_word(int vertex, int exponent) const {
  const Word conj = table_.word_of(cells_.vertex_members[vertex][0]);
  return conj * Word::generator(1).pow(exponent) * conj.inverse();
}

RegularMap build_map(const Presentation& p, std::size_t max_cosets) {
  if (p.generators.size() != 2) {
    throw NotAMapError("a standard map presentation has exactly 2 generators, got " +
                       std::to_string(p.generators.size()));
  }
  RegularMap m;
  m.pres_ = p;
  m.table_ = regular_representation(p, max_cosets);

  const Word wr = Word::generator(0);
  const Word ws = Word::generator(1);
  m.gen_r_ = m.table_.element_of_word(wr);
  m.gen_s_ = m.table_.element_of_word(ws);
  if (m.gen_r_ == 0 || m.gen_s_ == 0) {
    throw TrivialGeneratorError("generator " +
                                std::string(m.gen_r_ == 0 ? p.generators[0] : p.generators[1]) +
                                " evaluates to the identity");
  }
  m.edge_flip_ = m.table_.element_of_word(wr * ws);
  if (m.table_.element_order(m.edge_flip_) != 2) {
    throw NotAMapError("R*S must have order 2, got order " +
                       std::to_string(m.table_.element_order(m.edge_flip_)));
  }
  m.face_size_ = m.table_.element_order(m.gen_r_);
  m.vertex_degree_ = m.table_.element_order(m.gen_s_);

  build_cells(m.table_, ws, m.cells_.vertex_of, m.cells_.vertex_members);
  build_cells(m.table_, wr * ws, m.cells_.edge_of, m.cells_.edge_members);
  build_cells(m.table_, wr, m.cells_.face_of, m.cells_.face_members);
  return m;
}

int genus(const RegularMap& m) {
  const int chi = m.cells().vertex_count() - m.cells().edge_count() + m.cells().face_count();
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw InconsistentSurfaceError("Euler characteristic " + std::to_string(chi) +
                                   " is not that of a closed orientable surface");
  }
  return (2 - chi) / 2;
}

Graph skeleton(const RegularMap& m) {
  const CellStructure& cells = m.cells();
  Graph g;
  g.vertex_count = cells.vertex_count();
  g.adjacency.assign(g.vertex_count, {});
  for (const auto& members : cells.edge_members) {
    const int a = cells.vertex_of[members[0]];
    const int b = cells.vertex_of[members[1]];
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

bool is_simple(const Graph& g) {
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto& adj = g.adjacency[v];
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] == v) return false;
      if (i > 0 && adj[i] == adj[i - 1]) return false;
    }
  }
  return true;
}

bool is_simple(const RegularMap& m) { return is_simple(skeleton(m)); }

bool is_reflexive(const RegularMap& m) {
  return inverting_automorphism_exists(m.presentation(), m.group());
}

std::pair<int, int> map_type(const RegularMap& m) {
  return {m.face_size(), m.vertex_degree()};
}

Classification classify(const RegularMap& m) {
  const GroupTable& t = m.group();
  const Word wr = Word::generator(0);
  const Word ws = Word::generator(1);
  const Word flip = (wr * ws).pow(2);

  if (m.order() == 12 && t.element_of_word(wr.pow(3)) == 0 &&
      t.element_of_word(ws.pow(3)) == 0 && t.element_of_word(flip) == 0) {
    return {ClassificationTag::Tetrahedron, 0};
  }

  // A map is fer(n) iff its group is a quotient of the fer(n) group of the
  // same order 6n^2, i.e. all four defining relators hold and the counts
  // match.
  if (m.face_size() == 3 && m.vertex_degree() % 2 == 0) {
    const int n = m.vertex_degree() / 2;
    if (m.order() == 6 * n * n && t.element_of_word(wr.pow(3)) == 0 &&
        t.element_of_word(ws.pow(2 * n)) == 0 && t.element_of_word(flip) == 0 &&
        t.element_of_word(commutator(wr, ws).pow(3)) == 0) {
      return {ClassificationTag::Fermat, n};
    }
  }
  return {ClassificationTag::Other, 0};
}

}  // namespace regmap
