#pragma once

#include <vector>

#include "asf/common.hpp"

namespace asf {

// Type A_{n-1} root data in coordinates: roots are e_i - e_j with 1-based
// indices i != j; a root is positive when i < j.
struct FiniteRoot {
  int i = 0, j = 0;
  bool operator==(const FiniteRoot& o) const { return i == o.i && j == o.j; }
};

// root + level * delta
struct AffineRoot {
  FiniteRoot root;
  Int level = 0;
  bool operator==(const AffineRoot& o) const { return root == o.root && level == o.level; }
};

std::vector<FiniteRoot> positive_roots(int n);

inline bool finite_root_positive(const FiniteRoot& r) { return r.i < r.j; }

inline bool affine_root_positive(const AffineRoot& r) {
  return r.level > 0 || (r.level == 0 && finite_root_positive(r.root));
}

inline AffineRoot negate(const AffineRoot& r) {
  return AffineRoot{FiniteRoot{r.root.j, r.root.i}, -r.level};
}

bool weakly_decreasing(const std::vector<Int>& v);

// Dominance order between weakly decreasing integer vectors of equal length.
// Defined only when coordinate sums agree (the difference must lie in the
// root lattice); unequal sums compare as false.
//
// Prefix-sum form: every prefix sum of lam is at most that of mu.
bool dominance_leq_star(const std::vector<Int>& lam, const std::vector<Int>& mu);

// Tail-count form: for every threshold r the count sum_{j >= r} #{lam_i >= j}
// is at most the one for mu. Provably equivalent to the prefix-sum form; the
// two are implemented independently and cross-tested.
bool dominance_leq_dagger(const std::vector<Int>& lam, const std::vector<Int>& mu);

// sum_{j >= r} #{v_i >= j} = sum_i max(0, v_i - r + 1); shared by the
// dagger form and the membership row counts.
Int tail_count(const std::vector<Int>& v, Int r);

}  // namespace asf
