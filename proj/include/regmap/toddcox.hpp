#pragma once

#include <cstddef>
#include <vector>

#include "regmap/words.hpp"

namespace regmap {

constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// Complete coset table of a subgroup of a finitely presented group.
// Columns come in pairs: column 2*g is the action of generator g, column
// 2*g + 1 the action of its inverse. Row 0 is the coset of the subgroup.
// Cosets are renumbered into breadth-first discovery order after
// enumeration, so tables are reproducible bit for bit.
struct CosetTable {
  int ngens = 0;
  std::vector<std::vector<int>> rows;
  std::vector<Word> subgroup;

  int cols() const { return 2 * ngens; }
  int size() const { return static_cast<int>(rows.size()); }
  int at(int coset, Letter l) const { return rows[coset][l]; }
  int trace(int coset, const Word& w) const {
    for (Letter l : w.letters()) coset = rows[coset][l];
    return coset;
  }
};

// HLT-style Todd-Coxeter enumeration of the cosets of <subgroup> in the
// group defined by p. Throws OverflowError when more than max_cosets rows
// would be needed; the group may be infinite or the bound too small.
CosetTable coset_enumeration(const Presentation& p, const std::vector<Word>& subgroup,
                             std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace regmap
