#pragma once

#include <array>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

namespace asf {

// One variable A_{ji} per positive root e_i - e_j (1 <= i < j <= n).
// Variable indices put deeper variables first: sort by j - i descending,
// then j descending, so A_{n,1} has index 0. This makes plain
// exponent-vector comparison the order that prioritizes deep variables.
inline int var_count(int n) { return n * (n - 1) / 2; }

inline int var_index(int n, int j, int i) {
  assert(1 <= i && i < j && j <= n);
  int d = j - i;
  int before = (n - 1 - d) * (n - d) / 2;  // all variables of larger depth
  return before + (n - j);
}

inline std::pair<int, int> var_pair(int n, int idx) {
  for (int d = n - 1; d >= 1; --d) {
    int count = n - d;
    if (idx < count) {
      int j = n - idx;
      return {j, j - d};
    }
    idx -= count;
  }
  assert(false);
  return {0, 0};
}

// Dense exponent vector over the variable indices above.
using Monomial = std::vector<int>;

inline Monomial mono_one(int n) { return Monomial(var_count(n), 0); }

inline Monomial mono_var(int n, int j, int i) {
  Monomial m = mono_one(n);
  m[var_index(n, j, i)] = 1;
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  assert(a.size() == b.size());
  Monomial r = a;
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b componentwise
  assert(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline int mono_total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline bool mono_is_one(const Monomial& m) {
  for (int e : m)
    if (e != 0) return false;
  return true;
}

enum class MonoOrder {
  DeepLex,         // pure lex over the deep-first variable order
  DepthGradedLex,  // grade by total degree within each depth class first
  StartLex,        // lex by link start ascending, then span descending
};

// true iff a < b in the given order
inline bool mono_less(const Monomial& a, const Monomial& b, MonoOrder ord, int n) {
  if (ord == MonoOrder::DeepLex) return a < b;
  if (ord == MonoOrder::StartLex) {
    // A_{j,i} is the link i -> j: scan starts left to right, longest link of
    // each start is the most significant.
    for (int i = 1; i < n; ++i)
      for (int j = n; j > i; --j) {
        int k = var_index(n, j, i);
        if (a[k] != b[k]) return a[k] < b[k];
      }
    return false;
  }
  // per-depth degree vector, deepest first, then DeepLex tiebreak
  int idx = 0;
  for (int d = n - 1; d >= 1; --d) {
    int da = 0, db = 0;
    for (int c = 0; c < n - d; ++c, ++idx) {
      da += a[idx];
      db += b[idx];
    }
    if (da != db) return da < db;
  }
  return a < b;
}

// Serialization form: [j, i, exponent] triples sorted by (j, i).
inline std::vector<std::array<int, 3>> mono_triples(int n, const Monomial& m) {
  std::vector<std::array<int, 3>> out;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      int e = m[var_index(n, j, i)];
      if (e != 0) out.push_back({j, i, e});
    }
  return out;
}

inline std::string mono_str(int n, const Monomial& m) {
  if (mono_is_one(m)) return "1";
  std::string out;
  for (auto& t : mono_triples(n, m)) {
    if (!out.empty()) out += "*";
    out += "A_" + std::to_string(t[0]) + "_" + std::to_string(t[1]);
    if (t[2] != 1) out += "^" + std::to_string(t[2]);
  }
  return out;
}

}  // namespace asf
