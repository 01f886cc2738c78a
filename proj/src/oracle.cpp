#include "asf/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "asf/certificate.hpp"
#include "asf/monomial.hpp"
#include "asf/qmatrix.hpp"

namespace asf {

namespace {

QLoopVec evaluated_column(const LoopMatrix& m, int col, const std::vector<Rational>& values) {
  int dim = static_cast<int>(m.size());
  QLoopVec v(dim);
  for (int row = 1; row <= dim; ++row)
    for (const auto& [k, poly] : m[row - 1][col - 1].c) {
      Rational c = eval_at(poly, values);
      if (c != 0) v[row - 1][k] = c;
    }
  return v;
}

QLoopVec shifted(const QLoopVec& v, int shift) {
  QLoopVec r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (const auto& [k, c] : v[j]) r[j][k + shift] = c;
  return r;
}

int min_exponent(const QLoopVec& v) {
  int m = std::numeric_limits<int>::max();
  for (const auto& coord : v)
    if (!coord.empty()) m = std::min(m, coord.begin()->first);
  return m;
}

// Image of the module in the coefficient window [-p, p]: every t-power shift
// of every generator that still meets the window, flattened coordinate-major
// to a row of length n * (2p + 1). Shifting by t only raises exponents, so
// shifts past the window contribute the zero row and stop mattering.
QMatrix window_rows(const std::vector<QLoopVec>& gens, int n, int p) {
  int width = 2 * p + 1;
  QMatrix rows;
  for (const auto& g : gens) {
    int lo = min_exponent(g);
    if (lo == std::numeric_limits<int>::max()) continue;  // zero generator
    if (lo < -p) throw PrecisionError("lattice generator extends below the window");
    for (int k = 0; lo + k <= p; ++k) {
      std::vector<Rational> row(static_cast<std::size_t>(n) * width, 0);
      bool any = false;
      for (int j = 1; j <= n; ++j)
        for (const auto& [e, c] : g[j - 1]) {
          if (e + k > p) continue;
          row[static_cast<std::size_t>(j - 1) * width + (e + k + p)] = c;
          any = true;
        }
      if (any) rows.push_back(std::move(row));
    }
  }
  return rows;
}

// One window size; in_attracting_nbhd compares two of these.
bool attracting_verdict(const LatticeChain& chain, const AffineWeylElement& y, int p) {
  int n = chain.n;
  AffineWeylElement yinv = inverse(y);
  int width = 2 * p + 1;
  for (int i = 1; i <= n; ++i) {
    QMatrix v = window_rows(chain.gens[i - 1], n, p);
    int vrank = rank_q(v);
    // The complement below y's module is spanned by unit vectors, one per
    // lattice slot strictly under the module's floor in each coordinate.
    QMatrix combined = std::move(v);
    int extra = 0;
    for (int jp = 1; jp <= n; ++jp) {
      int src = yinv.perm[jp - 1];
      Int top = -y.trans[src - 1] - (src <= i ? 1 : 0);
      Int hi = std::min<Int>(top, p);
      for (Int e = -p; e <= hi; ++e) {
        std::vector<Rational> row(static_cast<std::size_t>(n) * width, 0);
        row[static_cast<std::size_t>(jp - 1) * width + static_cast<int>(e) + p] = 1;
        combined.push_back(std::move(row));
        ++extra;
      }
    }
    // Trivial intersection iff the unit rows are independent from the module.
    if (rank_q(combined) != vrank + extra) return false;
  }
  return true;
}

}  // namespace

LatticeChain component_chain(const AffineWeylElement& x, const SpectralParams& sp,
                             const std::vector<Rational>& values) {
  int n = x.n();
  if (!in_fundamental_box(x))
    throw std::invalid_argument("component_chain: label outside the fundamental box");
  if (sp.n() != n) throw std::invalid_argument("component_chain: spectral rank mismatch");
  if (static_cast<int>(values.size()) != var_count(n))
    throw std::invalid_argument("component_chain: wrong number of entry values");

  ExponentTable table = exponent_table(longest_box_element(n));
  LoopMatrix m = component_matrix(table, sp, default_window(table));
  std::vector<QLoopVec> cols(n);
  for (int c = 1; c <= n; ++c) cols[c - 1] = evaluated_column(m, c, values);

  LatticeChain chain;
  chain.n = n;
  chain.gens.resize(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int shift = -static_cast<int>(x.trans[j - 1]) + (j > i ? 1 : 0);
      chain.gens[i - 1].push_back(shifted(cols[x.perm[j - 1] - 1], shift));
    }
  return chain;
}

LatticeChain standard_chain(const AffineWeylElement& z) {
  int n = z.n();
  LatticeChain chain;
  chain.n = n;
  chain.gens.resize(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      QLoopVec g(n);
      g[z.perm[j - 1] - 1][-static_cast<int>(z.trans[j - 1]) + (j > i ? 1 : 0)] = 1;
      chain.gens[i - 1].push_back(std::move(g));
    }
  return chain;
}

int default_precision(const AffineWeylElement& x) {
  Int spread = 0;
  for (const auto& v : all_vertex_images(x)) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    spread = std::max(spread, *hi - *lo);
  }
  return static_cast<int>(spread) + 2;
}

bool in_attracting_nbhd(const LatticeChain& chain, const AffineWeylElement& y, int precision) {
  if (chain.n != y.n()) throw std::invalid_argument("in_attracting_nbhd: rank mismatch");
  if (static_cast<int>(chain.gens.size()) != chain.n)
    throw std::invalid_argument("in_attracting_nbhd: malformed chain");
  if (precision < 1) throw std::invalid_argument("in_attracting_nbhd: precision must be positive");
  bool narrow = attracting_verdict(chain, y, precision);
  bool wide = attracting_verdict(chain, y, precision + 1);
  if (narrow != wide)
    throw PrecisionError("attracting-neighborhood verdict changed when the window widened");
  return narrow;
}

int membership_sample_witness(const AffineWeylElement& x, const AffineWeylElement& y,
                              const SpectralParams& sp, int trials, std::uint64_t seed,
                              int precision) {
  int n = x.n();
  if (y.n() != n) throw std::invalid_argument("membership_sample: rank mismatch");
  if (trials < 1) throw std::invalid_argument("membership_sample: need at least one trial");
  if (precision <= 0) {
    Int far = 0;
    for (Int t : y.trans) far = std::max(far, t < 0 ? -t : t);
    precision = std::max(default_precision(x), static_cast<int>(far) + 2);
  }
  for (int trial = 0; trial < trials; ++trial) {
    LatticeChain chain =
        component_chain(x, sp, random_assignment(var_count(n), seed_mix(seed, trial)));
    if (in_attracting_nbhd(chain, y, precision)) return trial;
  }
  return -1;
}

std::vector<AffineWeylElement> orbit_closure_fixed_points(const AffineWeylElement& x) {
  if (!in_fundamental_box(x))
    throw std::invalid_argument("orbit_closure_fixed_points: label outside the fundamental box");
  return sorted_canonical(bruhat_interval_below(multiply(w0(x.n()), x)));
}

std::vector<AffineWeylElement> oracle_fixed_point_set(const AffineWeylElement& x,
                                                      const SpectralParams& sp,
                                                      std::uint64_t seed, int precision) {
  int n = x.n();
  if (!in_fundamental_box(x))
    throw std::invalid_argument("oracle_fixed_point_set: label outside the fundamental box");

  LatticeChain chain = component_chain(x, sp, random_assignment(var_count(n), seed));

  std::set<AffineWeylElement> candidates;
  for (const auto& m : orbit_closure_fixed_points(x)) {
    candidates.insert(m);
    for (int i = 0; i < n; ++i) {
      AffineWeylElement s = simple_reflection(n, i);
      candidates.insert(multiply(s, m));
      candidates.insert(multiply(m, s));
    }
  }

  if (precision <= 0) {
    precision = default_precision(x);
    Int far = 0;
    for (const auto& z : candidates)
      for (Int t : z.trans) far = std::max(far, t < 0 ? -t : t);
    precision = std::max(precision, static_cast<int>(far) + 2);
  }

  std::vector<AffineWeylElement> members;
  for (const auto& z : candidates)
    if (in_attracting_nbhd(chain, z, precision)) members.push_back(z);
  return sorted_canonical(std::move(members));
}

}  // namespace asf
