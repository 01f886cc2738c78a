#pragma once

#include <map>
#include <string>
#include <vector>

#include "asf/common.hpp"
#include "asf/monomial.hpp"
#include "asf/rational.hpp"

namespace asf {

// Sparse multivariate polynomial over the A variables, exact rational
// coefficients. Terms are keyed by exponent vector; no zero coefficient is
// ever stored. The map's largest key is the DeepLex leading term.
struct Poly {
  int n = 0;  // rank; the variable set is A_{ji}, 1 <= i < j <= n
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }

  bool operator==(const Poly& o) const { return n == o.n && terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
};

inline Poly poly_zero(int n) { return Poly{n, {}}; }

inline Poly poly_const(int n, const Rational& c) {
  Poly p{n, {}};
  if (c != 0) p.terms[mono_one(n)] = c;
  return p;
}

inline Poly poly_term(int n, const Monomial& m, const Rational& c) {
  Poly p{n, {}};
  if (c != 0) p.terms[m] = c;
  return p;
}

inline Poly poly_variable(int n, int j, int i) {
  return poly_term(n, mono_var(n, j, i), 1);
}

inline void poly_add_term(Poly& p, const Monomial& m, const Rational& c) {
  auto it = p.terms.find(m);
  if (it == p.terms.end()) {
    if (c != 0) p.terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) p.terms.erase(it);
}

inline Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (auto& [m, c] : b.terms) poly_add_term(r, m, c);
  return r;
}

inline Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [m, c] : r.terms) c = -c;
  return r;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

inline Poly operator*(const Poly& a, const Poly& b) {
  Poly r{a.n, {}};
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) poly_add_term(r, mono_mul(ma, mb), ca * cb);
  return r;
}

inline Poly operator*(const Rational& c, const Poly& a) {
  Poly r{a.n, {}};
  if (c == 0) return r;
  for (auto& [m, co] : a.terms) r.terms.emplace(m, c * co);
  return r;
}

inline Rational coefficient_of(const Poly& p, const Monomial& m) {
  auto it = p.terms.find(m);
  return it == p.terms.end() ? Rational(0) : it->second;
}

inline int poly_total_degree(const Poly& p) {
  int d = 0;
  for (auto& [m, c] : p.terms) d = std::max(d, mono_total_degree(m));
  return d;
}

// assignment[k] = value of the variable with index k
inline Rational eval_at(const Poly& p, const std::vector<Rational>& assignment) {
  Rational out = 0;
  for (auto& [m, c] : p.terms) {
    Rational t = c;
    for (size_t k = 0; k < m.size(); ++k) {
      if ((int)assignment.size() <= (int)k && m[k] != 0)
        throw std::invalid_argument("eval_at: missing variable value");
      for (int e = 0; e < m[k]; ++e) t *= assignment[k];
    }
    out += t;
  }
  return out;
}

inline Monomial leading_monomial(const Poly& p, MonoOrder ord = MonoOrder::DeepLex) {
  if (p.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  if (ord == MonoOrder::DeepLex) return p.terms.rbegin()->first;
  const Monomial* best = nullptr;
  for (auto& [m, c] : p.terms)
    if (!best || mono_less(*best, m, ord, p.n)) best = &m;
  return *best;
}

// Exact division: q must divide p in the polynomial ring. Peels leading
// terms; throws std::domain_error if the division is not exact.
inline Poly poly_exact_div(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly r = p;
  Poly quot{p.n, {}};
  auto lq = q.terms.rbegin();
  while (!r.is_zero()) {
    auto lr = r.terms.rbegin();
    Monomial m(lr->first.size());
    for (size_t k = 0; k < m.size(); ++k) {
      m[k] = lr->first[k] - lq->first[k];
      if (m[k] < 0) throw std::domain_error("inexact polynomial division");
    }
    Rational c = lr->second / lq->second;
    Poly t = poly_term(p.n, m, c);
    quot = quot + t;
    r = r - t * q;
  }
  return quot;
}

inline std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += rat_str(it->second);
    if (!mono_is_one(it->first)) out += "*" + mono_str(p.n, it->first);
  }
  return out;
}

// ---- matrices over Poly ----

using PolyMatrix = std::vector<std::vector<Poly>>;

inline PolyMatrix poly_identity(int n, int dim) {
  PolyMatrix m(dim, std::vector<Poly>(dim, poly_zero(n)));
  for (int k = 0; k < dim; ++k) m[k][k] = poly_const(n, 1);
  return m;
}

inline Poly poly_det_cofactor(const PolyMatrix& m) {
  size_t d = m.size();
  if (d == 0) throw std::invalid_argument("cofactor det needs a rank hint for 0x0");
  int n = m[0][0].n;
  if (d == 1) return m[0][0];
  Poly out = poly_zero(n);
  int sign = 1;
  for (size_t r = 0; r < d; ++r) {
    if (!m[r][0].is_zero()) {
      PolyMatrix sub;
      sub.reserve(d - 1);
      for (size_t rr = 0; rr < d; ++rr) {
        if (rr == r) continue;
        sub.emplace_back(m[rr].begin() + 1, m[rr].end());
      }
      Poly t = m[r][0] * poly_det_cofactor(sub);
      out = sign > 0 ? out + t : out - t;
    }
    sign = -sign;
  }
  return out;
}

// Fraction-free (Bareiss) determinant: all intermediate divisions are exact
// in the polynomial ring, avoiding rational-function swell.
inline Poly poly_det(const PolyMatrix& input) {
  size_t d = input.size();
  for (auto& row : input)
    if (row.size() != d) throw std::invalid_argument("poly_det: not square");
  if (d == 0) throw std::invalid_argument("poly_det: empty matrix");
  int n = input[0][0].n;
  if (d <= 3) return poly_det_cofactor(input);
  PolyMatrix m = input;
  int sign = 1;
  Poly prev = poly_const(n, 1);
  for (size_t k = 0; k + 1 < d; ++k) {
    size_t piv = k;
    while (piv < d && m[piv][k].is_zero()) ++piv;
    if (piv == d) return poly_zero(n);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < d; ++i) {
      for (size_t j = k + 1; j < d; ++j)
        m[i][j] = poly_exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = poly_zero(n);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[d - 1][d - 1] : -m[d - 1][d - 1];
}

inline Rational vandermonde_det(const std::vector<Rational>& values) {
  Rational out = 1;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j) out *= values[j] - values[i];
  return out;
}

}  // namespace asf
