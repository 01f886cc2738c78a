#include "asf/certificate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "asf/oracle.hpp"
#include "asf/polynomial.hpp"
#include "asf/qmatrix.hpp"

namespace asf {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NonZero: return "nonzero";
    case Verdict::IdenticallyZero: return "identically-zero";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Certificate: return "certificate";
    case Method::Symbolic: return "symbolic";
    case Method::Randomized: return "randomized";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "certificate") return Method::Certificate;
  if (text == "symbolic") return Method::Symbolic;
  if (text == "randomized") return Method::Randomized;
  if (text == "oracle") return Method::Oracle;
  throw UsageError("unknown method: " + text);
}

Certificate greedy_certificate(const BlockStructure& bs) {
  if (!bs.feasible) throw std::invalid_argument("greedy_certificate: structure is infeasible");
  int R = static_cast<int>(bs.spread);
  for (int l = 1; l <= R; ++l)
    if (bs.col_counts[l] <= bs.col_counts[l - 1])
      throw std::invalid_argument("greedy_certificate: column counts must strictly increase");

  Certificate cert;
  cert.bs = bs;
  std::vector<int> taken(R + 1, 0);
  for (int r = 0; r <= R; ++r) {
    int need = bs.row_counts[r];
    if (need == 0) continue;
    int own = std::min(bs.col_counts[r], need);
    for (int p = 1; p <= own; ++p)
      cert.entries.push_back({r, p, r, p, {p}});
    taken[r] = own;

    // Walk into older blocks for the remaining rows. Each batch fills a
    // contiguous band from the bottom of the level upward.
    int rem = need - own;
    int walked = 0;
    for (int s = 1; rem > 0; ++s) {
      int b = r - s;
      if (b < 0) throw std::logic_error("greedy_certificate: ran out of column blocks");
      int avail = bs.col_counts[b] - taken[b];
      if (avail <= 0) continue;
      int take = std::min(avail, rem);
      bool last_batch = (take == rem);
      int row_lo = need - walked - take + 1;
      for (int t = 0; t < take; ++t) {
        int p = taken[b] + 1 + t;
        int q = row_lo + t;
        if (q < p + s + 1) throw std::logic_error("greedy_certificate: jump has no room");
        std::vector<int> chain;
        if (last_batch) {
          chain.push_back(p);
          for (int v = p + s + 1; v <= q; ++v) chain.push_back(v);
        } else {
          for (int v = p; v <= q - s - 1; ++v) chain.push_back(v);
          chain.push_back(q);
        }
        cert.entries.push_back({r, q, b, p, chain});
      }
      taken[b] += take;
      walked += take;
      rem -= take;
    }
  }
  return cert;
}

Monomial certificate_monomial(int n, const Certificate& cert) {
  Monomial m = mono_one(n);
  for (const auto& e : cert.entries) m = mono_mul(m, chain_monomial(n, e.chain));
  return m;
}

Monomial certificate_level_monomial(int n, const Certificate& cert, int level) {
  Monomial m = mono_one(n);
  for (const auto& e : cert.entries)
    if (e.level == level) m = mono_mul(m, chain_monomial(n, e.chain));
  return m;
}

std::vector<std::vector<std::pair<int, int>>> certificate_level_columns(const Certificate& cert) {
  std::vector<std::vector<std::pair<int, int>>> cols(cert.bs.spread + 1);
  for (const auto& e : cert.entries) cols[e.level].push_back({e.col_level, e.col_p});
  for (auto& v : cols) std::sort(v.begin(), v.end());
  return cols;
}

PolyMatrix certificate_level_square(const Certificate& cert, int level,
                                    const std::vector<PolyMatrix>& tcoeff) {
  auto cols = certificate_level_columns(cert)[level];
  int rows = cert.bs.row_counts[level];
  if (static_cast<int>(cols.size()) != rows)
    throw std::logic_error("certificate_level_square: row/column mismatch");
  int n = cert.bs.n;
  PolyMatrix sq(rows, std::vector<Poly>(rows, poly_zero(n)));
  for (int qi = 0; qi < rows; ++qi) {
    for (int ci = 0; ci < rows; ++ci) {
      int d = level - cols[ci].first;
      if (d < 0) throw std::logic_error("certificate_level_square: column above its row level");
      if (d >= static_cast<int>(tcoeff.size()))
        throw std::invalid_argument("certificate_level_square: coefficient stack too short");
      sq[qi][ci] = tcoeff[d][qi][cols[ci].second - 1];
    }
  }
  return sq;
}

Rational transversal_coefficient(const PolyMatrix& square, const Monomial& mono) {
  int dim = static_cast<int>(square.size());
  if (dim == 0) return mono_is_one(mono) ? rat(1) : rat(0);
  Monomial budget = mono;
  std::vector<char> used(dim, 0);
  Rational total = 0;
  std::function<void(int, const Rational&)> rec = [&](int col, const Rational& acc) {
    if (col == dim) {
      if (mono_is_one(budget)) total += acc;
      return;
    }
    for (int row = 0; row < dim; ++row) {
      if (used[row]) continue;
      for (const auto& [m, c] : square[row][col].terms) {
        if (!mono_divides(m, budget)) continue;
        int inv = 0;
        for (int rr = row + 1; rr < dim; ++rr) inv += used[rr];
        for (int k = 0; k < static_cast<int>(m.size()); ++k) budget[k] -= m[k];
        used[row] = 1;
        rec(col + 1, (inv % 2) ? Rational(-acc * c) : Rational(acc * c));
        used[row] = 0;
        for (int k = 0; k < static_cast<int>(m.size()); ++k) budget[k] += m[k];
      }
    }
  };
  rec(0, rat(1));
  return total;
}

int certificate_interleave_sign(const Certificate& cert) {
  // Global column order is (block level, column index); label each column by
  // the row level that consumed it, then count label inversions.
  std::map<std::pair<int, int>, int> consumer;
  for (const auto& e : cert.entries) consumer[{e.col_level, e.col_p}] = e.level;
  if (static_cast<int>(consumer.size()) != cert.bs.total_cols())
    throw std::logic_error("certificate_interleave_sign: unconsumed columns");
  std::vector<int> labels;
  labels.reserve(consumer.size());
  for (const auto& [col, lvl] : consumer) labels.push_back(lvl);
  long inv = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] > labels[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

Rational certificate_coefficient(const Certificate& cert, const std::vector<PolyMatrix>& tcoeff) {
  Rational prod = rat(certificate_interleave_sign(cert));
  int n = cert.bs.n;
  for (int r = 0; r <= static_cast<int>(cert.bs.spread); ++r) {
    if (cert.bs.row_counts[r] == 0) continue;
    PolyMatrix sq = certificate_level_square(cert, r, tcoeff);
    Monomial m = certificate_level_monomial(n, cert, r);
    prod = prod * transversal_coefficient(sq, m);
    if (prod == 0) break;
  }
  return prod;
}

std::vector<Rational> random_assignment(int vars, std::uint64_t seed) {
  std::vector<Rational> a(vars);
  std::uint64_t state = seed;
  for (int k = 0; k < vars; ++k) {
    Int num = static_cast<Int>(splitmix64(state) % 2001) - 1000;
    a[k] = rat(num);
  }
  return a;
}

namespace {

QMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& at) {
  QMatrix q(m.size(), std::vector<Rational>(m.empty() ? 0 : m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) q[i][j] = eval_at(m[i][j], at);
  return q;
}

Int matrix_degree_bound(const PolyMatrix& m) {
  Int total = 0;
  for (const auto& row : m) {
    Int best = 0;
    for (const auto& e : row) best = std::max(best, static_cast<Int>(poly_total_degree(e)));
    total += best;
  }
  return total;
}

void run_tasks(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  int k = std::max(1, threads);
  if (k == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr err;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t width = std::min(static_cast<std::size_t>(k), count);
  for (std::size_t i = 0; i < width; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Verdict combine_overall(const std::vector<BaseVerdict>& bases) {
  bool inconclusive = false;
  for (const auto& b : bases) {
    if (b.verdict == Verdict::IdenticallyZero) return Verdict::IdenticallyZero;
    if (b.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::NonZero;
}

}  // namespace

MembershipReport membership(const AffineWeylElement& x, const AffineWeylElement& y,
                            const SpectralParams& sp, const MembershipOptions& opt) {
  int n = x.n();
  if (y.n() != n || sp.n() != n) throw std::invalid_argument("membership: rank mismatch");
  if (!in_fundamental_box(x))
    throw std::invalid_argument("membership: x must lie in the fundamental box");
  if (!is_min_coset_rep(y))
    throw std::invalid_argument("membership: y must be a minimal coset representative");
  if (opt.use_component_matrix &&
      (opt.method == Method::Certificate || opt.method == Method::Oracle))
    throw UsageError("this method requires the longest-element matrix form");

  MembershipReport rep;
  rep.x = x;
  rep.y = y;
  rep.method = opt.method;

  std::vector<BlockStructure> structures;
  int maxd = 0;
  for (int base = 0; base < n; ++base) {
    structures.push_back(block_structure(x, y, base));
    maxd = std::max(maxd, static_cast<int>(structures.back().spread));
  }

  rep.comparable = true;
  for (int base = 0; base < n; ++base) {
    BaseVerdict bv;
    bv.base = base;
    bv.feasible = structures[base].feasible;
    if (!bv.feasible) {
      rep.comparable = false;
      bv.verdict = Verdict::IdenticallyZero;
    }
    rep.bases.push_back(bv);
  }

  if (opt.method == Method::Oracle) {
    // Lattice-model sampling; an infeasible base already rules y out, so the
    // sampler only runs on fully comparable pairs.
    if (rep.comparable) {
      int hit = membership_sample_witness(x, y, sp, opt.trials, opt.seed, opt.precision);
      for (int base = 0; base < n; ++base)
        rep.bases[base].verdict = hit >= 0 ? Verdict::NonZero : Verdict::Inconclusive;
      if (hit >= 0) {
        rep.witness = random_assignment(var_count(n), seed_mix(opt.seed, hit));
        rep.witness_trial = hit;
      }
    }
    rep.overall = combine_overall(rep.bases);
    return rep;
  }

  AffineWeylElement model = opt.use_component_matrix ? x : longest_box_element(n);
  ExponentTable table = exponent_table(model);
  std::vector<PolyMatrix> tcoeff;
  for (int d = 0; d <= maxd; ++d) tcoeff.push_back(t_coefficient_matrix(table, sp, d));

  if (opt.method == Method::Certificate) {
    for (int base = 0; base < n; ++base) {
      BaseVerdict& bv = rep.bases[base];
      if (!bv.feasible) continue;
      Certificate cert = greedy_certificate(structures[base]);
      bv.dim = structures[base].total_rows();
      bv.monomial = certificate_monomial(n, cert);
      bv.coefficient = certificate_coefficient(cert, tcoeff);
      bv.verdict = (bv.coefficient != 0) ? Verdict::NonZero : Verdict::Inconclusive;
    }
  } else if (opt.method == Method::Symbolic) {
    for (int base = 0; base < n; ++base) {
      BaseVerdict& bv = rep.bases[base];
      if (!bv.feasible) continue;
      PolyMatrix sq = selected_square(structures[base], tcoeff);
      bv.dim = static_cast<int>(sq.size());
      if (bv.dim > opt.symbolic_dim_cap) {
        bv.verdict = Verdict::Inconclusive;
        continue;
      }
      Poly det = poly_det(sq);
      bv.verdict = det.terms.empty() ? Verdict::IdenticallyZero : Verdict::NonZero;
    }
  } else {
    // Randomized: look for one assignment at which every feasible base's
    // determinant is nonvanishing at once.
    std::vector<PolyMatrix> squares(n);
    bool all_feasible = true;
    for (int base = 0; base < n; ++base) {
      if (!rep.bases[base].feasible) {
        all_feasible = false;
        continue;
      }
      squares[base] = selected_square(structures[base], tcoeff);
      rep.bases[base].dim = static_cast<int>(squares[base].size());
      rep.bases[base].degree_bound = matrix_degree_bound(squares[base]);
    }
    if (all_feasible) {
      int vars = var_count(n);
      for (int trial = 0; trial < opt.trials; ++trial) {
        std::vector<Rational> at = random_assignment(vars, seed_mix(opt.seed, trial));
        bool ok = true;
        for (int base = 0; base < n && ok; ++base)
          if (det_q(evaluate_matrix(squares[base], at)) == 0) ok = false;
        if (ok) {
          rep.witness = at;
          rep.witness_trial = trial;
          for (int base = 0; base < n; ++base) rep.bases[base].verdict = Verdict::NonZero;
          break;
        }
      }
      if (rep.witness_trial < 0)
        for (int base = 0; base < n; ++base) rep.bases[base].verdict = Verdict::Inconclusive;
    }
  }

  rep.overall = combine_overall(rep.bases);
  return rep;
}

FixedPointResult fixed_point_set(const AffineWeylElement& x, const SpectralParams& sp,
                                 const FixedPointOptions& opt) {
  int n = x.n();
  if (!in_fundamental_box(x))
    throw std::invalid_argument("fixed_point_set: x must lie in the fundamental box");

  FixedPointResult res;
  res.x = x;

  std::vector<AffineWeylElement> candidates;
  for (const auto& y : bruhat_interval_below(x))
    if (is_min_coset_rep(y)) candidates.push_back(y);
  candidates = sorted_canonical(candidates);

  res.reports.resize(candidates.size());
  run_tasks(candidates.size(), opt.threads, [&](std::size_t i) {
    MembershipOptions mo;
    mo.method = opt.method;
    mo.use_component_matrix = opt.use_component_matrix;
    mo.seed = seed_mix(opt.seed, static_cast<std::uint64_t>(i));
    mo.trials = opt.trials;
    mo.precision = opt.precision;
    res.reports[i] = membership(x, candidates[i], sp, mo);
  });

  if (opt.inject_fault)
    for (auto& rep : res.reports)
      if (rep.overall == Verdict::NonZero) {
        rep.overall = Verdict::IdenticallyZero;
        break;
      }

  std::set<AffineWeylElement> members;
  const auto finite = weyl_finite_elements(n);
  for (const auto& rep : res.reports) {
    if (rep.overall == Verdict::Inconclusive) res.any_inconclusive = true;
    if (rep.overall != Verdict::NonZero) continue;
    for (const auto& u : finite) members.insert(multiply(u, rep.y));
  }
  res.members = sorted_canonical(std::vector<AffineWeylElement>(members.begin(), members.end()));

  AffineWeylElement top = multiply(w0(n), x);
  for (const auto& m : res.members)
    if (!bruhat_leq(m, top))
      throw std::logic_error("fixed_point_set: reported point above the component ceiling");

  res.expected = sorted_canonical(bruhat_interval_below(top));
  res.matches_expected = !res.any_inconclusive && res.members == res.expected;
  return res;
}

}  // namespace asf
