#include "asf/springer_matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace asf {

SpectralParams default_spectral(int n) {
  SpectralParams sp;
  Rational p = 1;
  for (int i = 1; i <= n; ++i) {
    sp.s.push_back(p - 1);
    p *= 2;
  }
  return sp;
}

SpectralParams random_spectral(int n, std::uint64_t seed) {
  std::uint64_t state = seed;
  while (true) {
    SpectralParams sp;
    for (int i = 0; i < n; ++i) {
      long num = static_cast<long>(splitmix64(state) % 101) - 50;
      long den = 1 + static_cast<long>(splitmix64(state) % 8);
      sp.s.push_back(rat(num, den));
    }
    std::set<Rational> uniq(sp.s.begin(), sp.s.end());
    if (static_cast<int>(uniq.size()) == n) return sp;
  }
}

Int a_exponent(const AffineWeylElement& w, int j, int i) {
  if (!(1 <= i && i < j && j <= w.n()))
    throw std::invalid_argument("a_exponent: need 1 <= i < j <= n");
  AffineWeylElement wi = inverse(w);
  // image level of (e_j - e_i) + (k+1) delta grows with k, so positivity is
  // monotone; start below any possible threshold and scan up
  Int start = (wi.trans[j - 1] - wi.trans[i - 1]) - 2;
  for (Int k = start;; ++k) {
    AffineRoot img = act_on_affine_root(wi, AffineRoot{FiniteRoot{j, i}, k + 1});
    if (affine_root_positive(img)) return k;
  }
}

Int ExponentTable::max_entry() const {
  Int m = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) m = std::max(m, at(j, i));
  return m;
}

ExponentTable exponent_table(const AffineWeylElement& w) {
  int n = w.n();
  ExponentTable t;
  t.n = n;
  t.a.assign(n, std::vector<Int>(n, 0));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      Int a = a_exponent(w, j, i);
      if (a < 0) throw std::domain_error("exponent_table: negative exponent");
      t.a[j - 1][i - 1] = a;
    }
  return t;
}

std::vector<std::vector<int>> chains_between(int i, int j) {
  if (i >= j) throw std::invalid_argument("chains_between: need i < j");
  int mid = j - i - 1;
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<size_t>(1) << mid);
  for (unsigned mask = 0; mask < (1u << mid); ++mask) {
    std::vector<int> chain{i};
    for (int b = 0; b < mid; ++b)
      if (mask & (1u << b)) chain.push_back(i + 1 + b);
    chain.push_back(j);
    out.push_back(std::move(chain));
  }
  return out;
}

Monomial chain_monomial(int n, const std::vector<int>& chain) {
  Monomial m = mono_one(n);
  for (size_t l = 0; l + 1 < chain.size(); ++l) m[var_index(n, chain[l + 1], chain[l])] += 1;
  return m;
}

Int chain_t_degree(const ExponentTable& table, const std::vector<int>& chain) {
  Int d = 0;
  for (size_t l = 0; l + 1 < chain.size(); ++l) d += table.at(chain[l + 1], chain[l]);
  return d;
}

Rational chain_constant(const SpectralParams& s, const std::vector<int>& chain) {
  size_t k = chain.size();
  Rational out = 1;
  const Rational& last = s.s[chain[k - 1] - 1];
  for (size_t l = 0; l + 1 < k; ++l) {
    out *= (s.s[chain[l] - 1] - s.s[chain[l + 1] - 1]) / (s.s[chain[l] - 1] - last);
  }
  return out;
}

Rational chain_constant_prime(const SpectralParams& s, const std::vector<int>& chain) {
  size_t k = chain.size();
  Rational out = (k % 2 == 1) ? 1 : -1;
  const Rational& first = s.s[chain[0] - 1];
  for (size_t l = 0; l + 1 < k; ++l) {
    out *= (s.s[chain[l] - 1] - s.s[chain[l + 1] - 1]) / (first - s.s[chain[l + 1] - 1]);
  }
  return out;
}

int default_window(const ExponentTable& table) {
  return static_cast<int>(table.n * table.max_entry()) + 2;
}

static void check_spectral(const ExponentTable& table, const SpectralParams& s) {
  if (s.n() != table.n) throw std::invalid_argument("spectral params: rank mismatch");
  std::set<Rational> uniq(s.s.begin(), s.s.end());
  if (static_cast<int>(uniq.size()) != table.n)
    throw std::invalid_argument("spectral params must be pairwise distinct");
}

LoopMatrix component_matrix(const ExponentTable& table, const SpectralParams& s, int hi) {
  check_spectral(table, s);
  int n = table.n;
  LoopMatrix m(n, std::vector<LoopPoly>(n, loop_zero(n, 0, hi)));
  for (int k = 0; k < n; ++k) loop_add_term(m[k][k], 0, poly_const(n, 1));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (const auto& chain : chains_between(i, j)) {
        Int deg = chain_t_degree(table, chain);
        loop_add_term(m[j - 1][i - 1], static_cast<int>(deg),
                      poly_term(n, chain_monomial(n, chain), chain_constant(s, chain)));
      }
  return m;
}

LoopMatrix component_matrix_inverse_direct(const ExponentTable& table, const SpectralParams& s,
                                           int hi) {
  check_spectral(table, s);
  int n = table.n;
  LoopMatrix m(n, std::vector<LoopPoly>(n, loop_zero(n, 0, hi)));
  for (int k = 0; k < n; ++k) loop_add_term(m[k][k], 0, poly_const(n, 1));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (const auto& chain : chains_between(i, j)) {
        Int deg = chain_t_degree(table, chain);
        loop_add_term(m[j - 1][i - 1], static_cast<int>(deg),
                      poly_term(n, chain_monomial(n, chain), chain_constant_prime(s, chain)));
      }
  return m;
}

LoopMatrix component_matrix_inverse_neumann(const LoopMatrix& m) {
  int dim = static_cast<int>(m.size());
  int n = m[0][0].n;
  int lo = m[0][0].lo, hi = m[0][0].hi;
  // nilpotent strictly lower part L = M - I; the inverse is the finite sum
  // of (-L)^k, k < dim
  LoopMatrix negl = m;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      negl[r][c] = -negl[r][c];
      if (r == c) loop_add_term(negl[r][c], 0, poly_const(n, 1));
    }
  LoopMatrix out = loop_identity(n, dim, lo, hi);
  LoopMatrix pow = loop_identity(n, dim, lo, hi);
  for (int k = 1; k < dim; ++k) {
    pow = loop_mul(pow, negl);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) out[r][c] = out[r][c] + pow[r][c];
  }
  return out;
}

LoopMatrix t_diag_spectral(int n, const SpectralParams& s, int hi) {
  LoopMatrix m(n, std::vector<LoopPoly>(n, loop_zero(n, 1, hi)));
  for (int k = 0; k < n; ++k) loop_add_term(m[k][k], 1, poly_const(n, s.s[k]));
  return m;
}

LoopMatrix conjugated_spectral_matrix(const ExponentTable& table, const SpectralParams& s) {
  int hi = default_window(table);
  LoopMatrix m = component_matrix(table, s, hi);
  LoopMatrix minv = component_matrix_inverse_direct(table, s, hi);
  LoopMatrix td = t_diag_spectral(table.n, s, hi + 1);
  return loop_mul(loop_mul(minv, td), m);
}

bool borel_membership(const AffineWeylElement& w, const LoopMatrix& m) {
  int dim = static_cast<int>(m.size());
  AffineWeylElement wi = inverse(w);
  for (int j = 1; j <= dim; ++j)
    for (int i = 1; i <= dim; ++i)
      for (const auto& [k, coeff] : m[j - 1][i - 1].c) {
        if (coeff.is_zero()) continue;
        if (i == j) {
          if (k < 0) return false;
          continue;
        }
        AffineRoot img = act_on_affine_root(wi, AffineRoot{FiniteRoot{j, i}, k});
        if (!affine_root_positive(img)) return false;
      }
  return true;
}

PolyMatrix t_coefficient_matrix(const ExponentTable& table, const SpectralParams& s, int d) {
  check_spectral(table, s);
  int n = table.n;
  PolyMatrix m(n, std::vector<Poly>(n, poly_zero(n)));
  if (d == 0)
    for (int k = 0; k < n; ++k) m[k][k] = poly_const(n, 1);
  if (d < 0) return m;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (const auto& chain : chains_between(i, j))
        if (chain_t_degree(table, chain) == d)
          poly_add_term(m[j - 1][i - 1], chain_monomial(n, chain), chain_constant(s, chain));
  return m;
}

int BlockStructure::total_cols() const {
  int t = 0;
  for (int c : col_counts) t += c;
  return t;
}

int BlockStructure::total_rows() const {
  int t = 0;
  for (int c : row_counts) t += c;
  return t;
}

BlockStructure block_structure(const AffineWeylElement& x, const AffineWeylElement& y, int base) {
  if (x.n() != y.n()) throw std::invalid_argument("block_structure: rank mismatch");
  BlockStructure bs;
  bs.n = x.n();
  bs.base = base;
  bs.lambda = vertex_image(x, base);
  bs.yvertex = vertex_image(y, base);
  if (!weakly_decreasing(bs.lambda) || !weakly_decreasing(bs.yvertex))
    throw std::invalid_argument("block_structure: vertex images must be weakly decreasing");
  Int top = bs.lambda.front();
  bs.spread = top - bs.lambda.back();
  for (Int l = 0; l <= bs.spread; ++l) {
    int count = 0;
    for (Int v : bs.lambda)
      if (v >= top - l) ++count;
    bs.col_counts.push_back(count);
  }
  for (Int r = 0; r <= bs.spread; ++r) {
    int count = 0;
    for (Int v : bs.yvertex)
      if (v >= top - r) ++count;
    bs.row_counts.push_back(count);
  }
  bs.feasible = bs.yvertex.front() <= top && bs.yvertex.back() >= bs.lambda.back();
  if (bs.feasible) {
    int rows = 0, cols = 0;
    for (size_t m = 0; m < bs.col_counts.size(); ++m) {
      rows += bs.row_counts[m];
      cols += bs.col_counts[m];
      if (rows > cols) {
        bs.feasible = false;
        break;
      }
    }
  }
  return bs;
}

PolyMatrix selected_square(const BlockStructure& bs, const std::vector<PolyMatrix>& tcoeff) {
  int dim = bs.total_rows();
  if (dim != bs.total_cols()) throw std::invalid_argument("selected_square: not square");
  int n = bs.n;
  PolyMatrix out(dim, std::vector<Poly>(dim, poly_zero(n)));
  int row = 0;
  for (size_t r = 0; r < bs.row_counts.size(); ++r)
    for (int q = 1; q <= bs.row_counts[r]; ++q, ++row) {
      int col = 0;
      for (size_t l = 0; l < bs.col_counts.size(); ++l)
        for (int p = 1; p <= bs.col_counts[l]; ++p, ++col) {
          if (r >= l) {
            int d = static_cast<int>(r - l);
            if (d >= static_cast<int>(tcoeff.size()))
              throw std::invalid_argument("selected_square: missing t coefficient");
            out[row][col] = tcoeff[d][q - 1][p - 1];
          }
        }
    }
  return out;
}

std::vector<int> row_levels(const BlockStructure& bs) {
  std::vector<int> out;
  for (size_t r = 0; r < bs.row_counts.size(); ++r)
    out.insert(out.end(), bs.row_counts[r], static_cast<int>(r));
  return out;
}

std::vector<int> col_levels(const BlockStructure& bs) {
  std::vector<int> out;
  for (size_t l = 0; l < bs.col_counts.size(); ++l)
    out.insert(out.end(), bs.col_counts[l], static_cast<int>(l));
  return out;
}

}  // namespace asf
