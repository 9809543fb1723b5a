#include "regmap/group.hpp"

#include <algorithm>

#include "regmap/errors.hpp"

namespace regmap {

GroupTable GroupTable::from_coset_table(const CosetTable& t) {
  GroupTable g;
  const int n = t.size();
  const int ncols = t.cols();
  g.cols_.assign(ncols, std::vector<int>(n));
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < ncols; ++x) g.cols_[x][c] = t.at(c, x);
  }

  // Breadth-first spanning tree rooted at the identity, scanning columns in
  // fixed order; with a standardized table discovery order is 0,1,2,...
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<int> bfs;
  bfs.reserve(n);
  bfs.push_back(0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int c = bfs[head];
    for (int x = 0; x < ncols; ++x) {
      const int e = g.cols_[x][c];
      if (!seen[e]) {
        seen[e] = true;
        parent[e] = c;
        via[e] = x;
        bfs.push_back(e);
      }
    }
  }

  g.words_.resize(n);
  for (int e : bfs) {
    if (e == 0) continue;
    std::vector<Letter> letters;
    for (int c = e; c != 0; c = parent[c]) letters.push_back(via[c]);
    std::reverse(letters.begin(), letters.end());
    g.words_[e] = Word(std::move(letters));
  }

  g.inverse_.resize(n);
  for (int e = 0; e < n; ++e) {
    g.inverse_[e] = g.element_of_word(g.words_[e].inverse());
  }
  return g;
}

int GroupTable::element_order(int e) const {
  int k = 1;
  int x = e;
  while (x != 0) {
    x = multiply(x, e);
    ++k;
  }
  return k;
}

GroupTable regular_representation(const Presentation& p, std::size_t max_order) {
  return GroupTable::from_coset_table(coset_enumeration(p, {}, max_order));
}

bool inverting_automorphism_exists(const Presentation& p, const GroupTable& t) {
  for (const Word& r : p.relators) {
    std::vector<Letter> flipped;
    flipped.reserve(r.size());
    for (Letter l : r.letters()) flipped.push_back(inverse_letter(l));
    if (t.element_of_word(Word(std::move(flipped))) != 0) return false;
  }
  return true;
}

}  // namespace regmap
