#include "regmap/toddcox.hpp"

#include <algorithm>
#include <numeric>

#include "regmap/errors.hpp"

// HLT enumeration with coincidence handling, followed by a standardization
// pass. The enumerator keeps a union-find structure over coset numbers;
// merging two cosets queues the dead one, and draining the queue re-deduces
// every table entry of a dead row onto live representatives. Writes to the
// table always install both an entry and its inverse mirror, so stripping a
// dead row also finds every live entry that pointed at it.

namespace regmap {

namespace {

class Enumerator {
 public:
  Enumerator(int ngens, const std::vector<Word>& relators, const std::vector<Word>& subgroup,
             std::size_t max_cosets)
      : ncols_(2 * ngens), limit_(max_cosets) {
    for (const Word& w : relators) {
      if (!w.empty()) relators_.push_back(w.letters());
    }
    for (const Word& w : subgroup) {
      if (!w.empty()) subgens_.push_back(w.letters());
    }
    tab_.assign(ncols_, -1);
    parent_.push_back(0);
  }

  void run() {
    for (const auto& w : subgens_) {
      scan_and_fill(0, w);
    }
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!alive(c)) continue;
      for (const auto& w : relators_) {
        scan_and_fill(c, w);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        if (at(c, x) < 0) define(c, x);
      }
    }
  }

  // Live rows compacted in index order, then renumbered into breadth-first
  // discovery order (columns scanned in fixed order from coset 0).
  std::vector<std::vector<int>> standardized() const {
    std::vector<int> compact(parent_.size(), -1);
    std::vector<int> live;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (parent_[c] == c) {
        compact[c] = static_cast<int>(live.size());
        live.push_back(c);
      }
    }
    const int n = static_cast<int>(live.size());
    std::vector<std::vector<int>> rows(n, std::vector<int>(ncols_, -1));
    for (int i = 0; i < n; ++i) {
      for (int x = 0; x < ncols_; ++x) {
        const int e = tab_[static_cast<std::size_t>(live[i]) * ncols_ + x];
        rows[i][x] = e < 0 ? -1 : compact[find(e)];
      }
    }

    std::vector<int> order(n, -1);  // old -> new
    std::vector<int> bfs;
    bfs.reserve(n);
    order[0] = 0;
    bfs.push_back(0);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      const int c = bfs[head];
      for (int x = 0; x < ncols_; ++x) {
        const int e = rows[c][x];
        if (e >= 0 && order[e] < 0) {
          order[e] = static_cast<int>(bfs.size());
          bfs.push_back(e);
        }
      }
    }
    std::vector<std::vector<int>> out(n, std::vector<int>(ncols_, -1));
    for (int c = 0; c < n; ++c) {
      for (int x = 0; x < ncols_; ++x) {
        const int e = rows[c][x];
        out[order[c]][x] = e < 0 ? -1 : order[e];
      }
    }
    return out;
  }

 private:
  bool alive(int c) const { return parent_[c] == c; }

  int find(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  int& at(int c, int x) { return tab_[static_cast<std::size_t>(c) * ncols_ + x]; }

  int define(int c, int x) {
    if (parent_.size() >= limit_) throw OverflowError(limit_);
    const int n = static_cast<int>(parent_.size());
    parent_.push_back(n);
    tab_.resize(tab_.size() + ncols_, -1);
    at(c, x) = n;
    at(n, inverse_letter(x)) = c;
    return n;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  // Install the fact a*x = b (both representatives); merges when a slot is
  // already taken by an equivalent coset.
  void deduce(int a, int x, int b) {
    const int t = at(a, x);
    if (t >= 0) {
      merge(t, b);
      return;
    }
    const int u = at(b, inverse_letter(x));
    if (u >= 0) {
      merge(u, a);
      return;
    }
    at(a, x) = b;
    at(b, inverse_letter(x)) = a;
  }

  void process_coincidences() {
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int d = queue_[head];
      for (int x = 0; x < ncols_; ++x) {
        const int e = at(d, x);
        if (e < 0) continue;
        at(d, x) = -1;
        if (at(e, inverse_letter(x)) == d) at(e, inverse_letter(x)) = -1;
        deduce(rep(d), x, rep(e));
      }
    }
    queue_.clear();
  }

  void coincidence(int a, int b) {
    merge(a, b);
    process_coincidences();
  }

  void scan_and_fill(int start, const std::vector<Letter>& w) {
    int f = start;
    std::size_t i = 0;
    int b = start;
    std::size_t j = w.size();  // backward cursor, one past the last unscanned letter
    while (true) {
      while (i < j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_letter(w[j - 1])) >= 0) b = at(b, inverse_letter(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inverse_letter(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int ncols_;
  std::size_t limit_;
  std::vector<std::vector<Letter>> relators_;
  std::vector<std::vector<Letter>> subgens_;
  std::vector<int> tab_;
  mutable std::vector<int> parent_;
  std::vector<int> queue_;
};

void verify_table(const CosetTable& t, const Presentation& p) {
  const int n = t.size();
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < t.cols(); ++x) {
      const int e = t.at(c, x);
      if (e < 0 || e >= n) throw Error("internal: incomplete coset table");
      if (t.at(e, inverse_letter(x)) != c) throw Error("internal: incompatible coset table");
    }
  }
  for (const Word& w : p.relators) {
    for (int c = 0; c < n; ++c) {
      if (t.trace(c, w) != c) throw Error("internal: relator does not close");
    }
  }
  for (const Word& w : t.subgroup) {
    if (t.trace(0, w) != 0) throw Error("internal: subgroup generator does not fix coset 0");
  }
}

}  // namespace

CosetTable coset_enumeration(const Presentation& p, const std::vector<Word>& subgroup,
                             std::size_t max_cosets) {
  if (max_cosets < 1) throw OverflowError(max_cosets);
  Enumerator e(static_cast<int>(p.generators.size()), p.relators, subgroup, max_cosets);
  e.run();
  CosetTable t;
  t.ngens = static_cast<int>(p.generators.size());
  t.rows = e.standardized();
  t.subgroup = subgroup;
  verify_table(t, p);
  return t;
}

}  // namespace regmap
