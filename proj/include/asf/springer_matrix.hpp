#pragma once

#include <cstdint>
#include <vector>

#include "asf/affine_weyl.hpp"
#include "asf/loop_poly.hpp"
#include "asf/polynomial.hpp"
#include "asf/rational.hpp"

namespace asf {

// Distinct equivariant weights s_1, ..., s_n entering the chain constants.
struct SpectralParams {
  std::vector<Rational> s;
  int n() const { return static_cast<int>(s.size()); }
};

// s_i = 2^{i-1} - 1: (0, 1, 3, 7, ...), pairwise differences stay simple.
SpectralParams default_spectral(int n);
SpectralParams random_spectral(int n, std::uint64_t seed);

// Smallest k such that w^{-1} maps (e_j - e_i) + (k+1) delta to a positive
// root; i < j. Scans upward from a provably-low start.
Int a_exponent(const AffineWeylElement& w, int j, int i);

struct ExponentTable {
  int n = 0;
  std::vector<std::vector<Int>> a;  // a[j-1][i-1] for i < j, zero elsewhere
  Int at(int j, int i) const { return a[j - 1][i - 1]; }
  Int max_entry() const;
};

// Throws std::domain_error if any exponent is negative (the matrix form
// below needs nonnegative powers, which minimal coset representatives give).
ExponentTable exponent_table(const AffineWeylElement& w);

// Strictly increasing index paths i = c_1 < c_2 < ... < c_k = j. The
// monomial of a chain is the product of one variable per link, so distinct
// chains have distinct monomials.
std::vector<std::vector<int>> chains_between(int i, int j);
Monomial chain_monomial(int n, const std::vector<int>& chain);
Int chain_t_degree(const ExponentTable& table, const std::vector<int>& chain);

// prod_{l<k} (s_{c_l} - s_{c_{l+1}}) / (s_{c_l} - s_{c_k}); 1 for k <= 2.
Rational chain_constant(const SpectralParams& s, const std::vector<int>& chain);
// (-1)^{k-1} prod_{l<k} (s_{c_l} - s_{c_{l+1}}) / (s_{c_1} - s_{c_{l+1}});
// the inverse-side constant. The denominator is anchored at the chain's own
// first index.
Rational chain_constant_prime(const SpectralParams& s, const std::vector<int>& chain);

// Window big enough for every chain power plus the conjugation shift.
int default_window(const ExponentTable& table);

// Lower unitriangular matrix over loop polynomials: entry (j,i), i < j, is
// the sum over chains i -> j of  c(chain) * t^{deg} * prod A_{link}.
LoopMatrix component_matrix(const ExponentTable& table, const SpectralParams& s, int hi);

// Closed-form inverse: same chain sums with the primed constants.
LoopMatrix component_matrix_inverse_direct(const ExponentTable& table, const SpectralParams& s,
                                           int hi);
// Independent inverse via the nilpotent part: sum_{k<n} (I - M)^k.
LoopMatrix component_matrix_inverse_neumann(const LoopMatrix& m);

// diag(t * s_1, ..., t * s_n) on the window [1, hi].
LoopMatrix t_diag_spectral(int n, const SpectralParams& s, int hi);

// M^{-1} (t diag s) M. For the matrix of a box element this collapses to
// t s_i on the diagonal and a single term t^{a_{ji}+1} (s_j - s_i) A_{ji}
// below it; tests pin that shape.
LoopMatrix conjugated_spectral_matrix(const ExponentTable& table, const SpectralParams& s);

// Does every stored coefficient of m lie in the w-twisted nonnegative
// algebra? Entry (row j, col i) at t^k carries the affine root
// (e_j - e_i) + k delta (k >= 0 suffices on the diagonal).
bool borel_membership(const AffineWeylElement& w, const LoopMatrix& m);

// Coefficient of t^d in the component matrix, as a polynomial matrix.
PolyMatrix t_coefficient_matrix(const ExponentTable& table, const SpectralParams& s, int d);

// Row/column layout of the truncated-module pairing between a component
// label x (columns, via lambda = x's vertex image) and a candidate y (rows).
// Level l of columns keeps the first j_l = #{q : lambda_q >= lambda_1 - l}
// slots; level r of rows keeps the first rho_r = #{q : yv_q >= lambda_1 - r}.
struct BlockStructure {
  int n = 0;
  int base = 0;
  std::vector<Int> lambda;
  std::vector<Int> yvertex;
  Int spread = 0;               // lambda_1 - lambda_n
  std::vector<int> col_counts;  // j_l, l = 0..spread
  std::vector<int> row_counts;  // rho_r, r = 0..spread
  bool feasible = false;        // row demand fits under the column supply

  int total_cols() const;
  int total_rows() const;
};

BlockStructure block_structure(const AffineWeylElement& x, const AffineWeylElement& y, int base);

// The square matrix whose determinant answers membership: selected rows
// (r, q), selected columns (l, p), entry = coefficient matrix of t^{r-l}
// at (q, p), zero when r < l. tcoeff[d] must hold the t^d coefficient.
PolyMatrix selected_square(const BlockStructure& bs, const std::vector<PolyMatrix>& tcoeff);

// Level labels of the selected rows / columns, in matrix order.
std::vector<int> row_levels(const BlockStructure& bs);
std::vector<int> col_levels(const BlockStructure& bs);

}  // namespace asf
