#pragma once

#include <vector>

#include "regmap/toddcox.hpp"
#include "regmap/words.hpp"

namespace regmap {

// A finite group in its regular representation: elements are indices
// 0..N-1 with 0 the identity, and each generator (and inverse) acts by
// right multiplication as a permutation of the indices. Built from a coset
// table over the trivial subgroup, so indices follow the table's
// breadth-first numbering and every element carries a canonical word.
class GroupTable {
 public:
  static GroupTable from_coset_table(const CosetTable& t);

  int order() const { return static_cast<int>(cols_.empty() ? 0 : cols_[0].size()); }
  int ngens() const { return static_cast<int>(cols_.size()) / 2; }

  int apply(int e, Letter l) const { return cols_[l][e]; }
  int apply_word(int e, const Word& w) const {
    for (Letter l : w.letters()) e = cols_[l][e];
    return e;
  }

  int element_of_word(const Word& w) const { return apply_word(0, w); }
  int multiply(int a, int b) const { return apply_word(a, words_[b]); }
  int inverse(int e) const { return inverse_[e]; }

  // Least k >= 1 with e^k = identity.
  int element_order(int e) const;

  // Canonical (breadth-first) word for an element.
  const Word& word_of(int e) const { return words_[e]; }

 private:
  std::vector<std::vector<int>> cols_;  // one permutation per letter
  std::vector<Word> words_;
  std::vector<int> inverse_;
};

// Regular representation of the group defined by p (enumeration over the
// trivial subgroup).
GroupTable regular_representation(const Presentation& p,
                                  std::size_t max_order = kDefaultMaxCosets);

// True iff the assignment g -> g^-1 on every generator extends to a group
// automorphism, i.e. every relator rewritten under that substitution still
// evaluates to the identity. For a standard map presentation this is the
// reflexivity criterion.
bool inverting_automorphism_exists(const Presentation& p, const GroupTable& t);

}  // namespace regmap
