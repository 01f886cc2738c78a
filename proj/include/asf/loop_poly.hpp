#pragma once

#include <map>
#include <string>
#include <vector>

#include "asf/polynomial.hpp"

namespace asf {

// Truncated Laurent polynomial in the loop parameter t with Poly
// coefficients. Represents an element that is exactly zero below `lo` and
// known only up to t^hi: operations narrow the window and refuse to answer
// past it instead of silently truncating.
struct LoopPoly {
  int n = 0;
  int lo = 0, hi = -1;           // declared window; empty when lo > hi
  std::map<int, Poly> c;         // nonzero coefficients, keys within window

  bool is_zero() const { return c.empty(); }
};

inline LoopPoly loop_zero(int n, int lo, int hi) { return LoopPoly{n, lo, hi, {}}; }

inline void loop_add_term(LoopPoly& p, int k, const Poly& coeff) {
  if (k < p.lo || k > p.hi) throw PrecisionError("loop coefficient outside declared window");
  if (coeff.is_zero()) return;
  auto it = p.c.find(k);
  if (it == p.c.end()) {
    p.c.emplace(k, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) p.c.erase(it);
}

inline LoopPoly loop_const(int n, const Rational& v, int lo, int hi) {
  LoopPoly p = loop_zero(n, lo, hi);
  if (v != 0) loop_add_term(p, 0, poly_const(n, v));
  return p;
}

inline Poly loop_coefficient(const LoopPoly& p, int k) {
  if (k < p.lo || k > p.hi) throw PrecisionError("loop coefficient outside declared window");
  auto it = p.c.find(k);
  return it == p.c.end() ? poly_zero(p.n) : it->second;
}

inline LoopPoly operator+(const LoopPoly& a, const LoopPoly& b) {
  LoopPoly r = loop_zero(a.n, std::min(a.lo, b.lo), std::min(a.hi, b.hi));
  if (r.lo > r.hi) throw PrecisionError("empty window in loop addition");
  for (auto& [k, p] : a.c)
    if (k <= r.hi) loop_add_term(r, k, p);
  for (auto& [k, p] : b.c)
    if (k <= r.hi) loop_add_term(r, k, p);
  return r;
}

inline LoopPoly operator*(const LoopPoly& a, const LoopPoly& b) {
  // The product is exact below min(a.lo + b.hi, b.lo + a.hi); beyond that a
  // truncated-away operand coefficient could have contributed.
  LoopPoly r = loop_zero(a.n, a.lo + b.lo, std::min(a.lo + b.hi, b.lo + a.hi));
  if (r.lo > r.hi) throw PrecisionError("empty window in loop multiplication");
  for (auto& [ka, pa] : a.c)
    for (auto& [kb, pb] : b.c) {
      int k = ka + kb;
      if (k <= r.hi) loop_add_term(r, k, pa * pb);
    }
  return r;
}

inline LoopPoly operator-(const LoopPoly& a) {
  LoopPoly r = a;
  for (auto& [k, p] : r.c) p = -p;
  return r;
}

inline LoopPoly operator-(const LoopPoly& a, const LoopPoly& b) { return a + (-b); }

// equality of stored data on the two windows' intersection is not what we
// want for identity checks: require identical content and compatible windows
inline bool loop_equal_on_common_window(const LoopPoly& a, const LoopPoly& b) {
  int lo = std::min(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  for (int k = lo; k <= hi; ++k) {
    auto ia = a.c.find(k);
    auto ib = b.c.find(k);
    bool za = ia == a.c.end(), zb = ib == b.c.end();
    if (za != zb) return false;
    if (!za && !(ia->second == ib->second)) return false;
  }
  return true;
}

using LoopMatrix = std::vector<std::vector<LoopPoly>>;

inline LoopMatrix loop_identity(int n, int dim, int lo, int hi) {
  LoopMatrix m(dim, std::vector<LoopPoly>(dim, loop_zero(n, lo, hi)));
  for (int k = 0; k < dim; ++k) m[k][k] = loop_const(n, 1, lo, hi);
  return m;
}

inline LoopMatrix loop_mul(const LoopMatrix& a, const LoopMatrix& b) {
  size_t rows = a.size(), mid = b.size(), cols = b[0].size();
  LoopMatrix r(rows);
  for (size_t i = 0; i < rows; ++i) {
    r[i].reserve(cols);
    for (size_t j = 0; j < cols; ++j) {
      LoopPoly acc = a[i][0] * b[0][j];
      for (size_t k = 1; k < mid; ++k) acc = acc + a[i][k] * b[k][j];
      r[i].push_back(acc);
    }
  }
  return r;
}

}  // namespace asf
