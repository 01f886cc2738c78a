#include <cstdint>
#include <stdexcept>

#include "asf/loop_poly.hpp"
#include "asf/monomial.hpp"
#include "asf/polynomial.hpp"
#include "asf/qmatrix.hpp"
#include "asf/rational.hpp"
#include "test_util.hpp"

using namespace asf;

namespace {

Rational random_rat(std::uint64_t& state, int span) {
  long num = static_cast<long>(splitmix64(state) % (2 * span + 1)) - span;
  long den = 1 + static_cast<long>(splitmix64(state) % 3);
  return rat(num, den);
}

Poly random_poly(int n, std::uint64_t& state, int nterms, int maxexp) {
  Poly p = poly_zero(n);
  for (int t = 0; t < nterms; ++t) {
    Monomial m = mono_one(n);
    for (auto& e : m)
      if (splitmix64(state) % 3 == 0) e = static_cast<int>(splitmix64(state) % (maxexp + 1));
    poly_add_term(p, m, rat(static_cast<long>(splitmix64(state) % 11) - 5));
  }
  return p;
}

std::vector<Rational> random_point(int n, std::uint64_t& state) {
  std::vector<Rational> v(var_count(n));
  for (auto& x : v) x = random_rat(state, 7);
  return v;
}

QMatrix eval_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
  QMatrix out(m.size());
  for (size_t r = 0; r < m.size(); ++r)
    for (const auto& p : m[r]) out[r].push_back(eval_at(p, point));
  return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.size(), std::vector<Rational>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace

TEST_CASE("rational strings round trip and normalize") {
  CHECK_EQ(rat_str(rat(1, 2)), std::string("1/2"));
  CHECK_EQ(rat_str(rat(-6, 4)), std::string("-3/2"));
  CHECK_EQ(rat_str(rat(5)), std::string("5/1"));
  CHECK(rat_parse("2/4") == rat(1, 2));
  CHECK(rat_parse("-3") == rat(-3));
  CHECK(rat_parse(rat_str(rat(22, 7))) == rat(22, 7));
  CHECK_THROWS_AS(rat_parse("1/0"), UsageError);
  CHECK_THROWS_AS(rat_parse("seven"), UsageError);
}

TEST_CASE("variable indexing is a bijection ordered deep first") {
  for (int n = 2; n <= 6; ++n) {
    int count = var_count(n);
    CHECK_EQ(count, n * (n - 1) / 2);
    for (int idx = 0; idx < count; ++idx) {
      auto [j, i] = var_pair(n, idx);
      CHECK(1 <= i && i < j && j <= n);
      CHECK_EQ(var_index(n, j, i), idx);
    }
  }
  // deepest variable gets index 0
  CHECK_EQ(var_index(3, 3, 1), 0);
  CHECK_EQ(var_index(3, 3, 2), 1);
  CHECK_EQ(var_index(3, 2, 1), 2);
  CHECK_EQ(var_index(4, 4, 1), 0);
}

TEST_CASE("monomial orders prioritize deep variables differently") {
  int n = 3;
  Monomial deep = mono_var(n, 3, 1);
  Monomial shallow = mono_mul(mono_var(n, 3, 2), mono_var(n, 2, 1));
  // one deep variable beats any product of shallower ones in pure lex
  CHECK(mono_less(shallow, deep, MonoOrder::DeepLex, n));
  CHECK(mono_less(shallow, deep, MonoOrder::DepthGradedLex, n));

  Monomial a32 = mono_var(n, 3, 2);
  Monomial a21_5 = mono_one(n);
  a21_5[var_index(n, 2, 1)] = 5;
  // pure lex: the depth-1 slot never outranks a depth-2 entry
  CHECK(mono_less(a21_5, a32, MonoOrder::DeepLex, n));
  // graded within depth classes: total degree at depth 1 wins when depth 2 ties
  CHECK(mono_less(a32, a21_5, MonoOrder::DepthGradedLex, n));

  CHECK_EQ(mono_str(n, mono_mul(deep, deep)), std::string("A_3_1^2"));
  CHECK_EQ(mono_str(n, shallow), std::string("A_2_1*A_3_2"));
  CHECK_EQ(mono_str(n, mono_one(n)), std::string("1"));
}

TEST_CASE("start-first order prefers links that begin early") {
  int n = 3;
  // links from position 1 outrank everything starting later
  CHECK(mono_less(mono_var(n, 2, 1), mono_var(n, 3, 1), MonoOrder::StartLex, n));
  CHECK(mono_less(mono_var(n, 3, 2), mono_var(n, 2, 1), MonoOrder::StartLex, n));

  // the n=4 pair the orders disagree on: a long link from 1 against a short
  // link from 1 paired with a long one from 2
  int m = 4;
  Monomial early_jump = mono_mul(mono_var(m, 3, 1), mono_var(m, 4, 3));
  Monomial late_jump = mono_mul(mono_var(m, 2, 1), mono_var(m, 4, 2));
  CHECK(mono_less(late_jump, early_jump, MonoOrder::StartLex, m));
  CHECK(mono_less(early_jump, late_jump, MonoOrder::DeepLex, m));
  CHECK(mono_less(early_jump, late_jump, MonoOrder::DepthGradedLex, m));

  // irreflexive and asymmetric on a sample
  for (const Monomial& a : {early_jump, late_jump}) {
    CHECK(!mono_less(a, a, MonoOrder::StartLex, m));
    for (const Monomial& b : {early_jump, late_jump})
      if (a != b) CHECK(mono_less(a, b, MonoOrder::StartLex, m) != mono_less(b, a, MonoOrder::StartLex, m));
  }
}

TEST_CASE("polynomial ring identities") {
  std::uint64_t state = 42;
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      Poly a = random_poly(n, state, 4, 2);
      Poly b = random_poly(n, state, 4, 2);
      Poly c = random_poly(n, state, 3, 2);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == poly_zero(n));
      CHECK((a + b) * (a - b) == a * a - b * b);
      // evaluation is a ring homomorphism
      auto point = random_point(n, state);
      CHECK(eval_at(a * b + c, point) == eval_at(a, point) * eval_at(b, point) + eval_at(c, point));
    }
}

TEST_CASE("coefficient extraction and leading terms") {
  int n = 3;
  Poly p = poly_variable(n, 3, 1) + rat(2) * (poly_variable(n, 3, 2) * poly_variable(n, 2, 1));
  CHECK(coefficient_of(p, mono_var(n, 3, 1)) == rat(1));
  CHECK(coefficient_of(p, mono_mul(mono_var(n, 3, 2), mono_var(n, 2, 1))) == rat(2));
  CHECK(coefficient_of(p, mono_one(n)) == rat(0));
  CHECK(leading_monomial(p) == mono_var(n, 3, 1));
  CHECK(leading_monomial(p, MonoOrder::DepthGradedLex) == mono_var(n, 3, 1));
  CHECK_EQ(poly_total_degree(p), 2);
  CHECK_THROWS_AS(leading_monomial(poly_zero(n)), std::invalid_argument);
}

TEST_CASE("exact division inverts multiplication") {
  std::uint64_t state = 77;
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 60; ++trial) {
      Poly a = random_poly(n, state, 3, 2);
      Poly b = random_poly(n, state, 3, 2);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(poly_exact_div(a * b, a) == b);
      CHECK(poly_exact_div(a * b, b) == a);
    }
  int n = 2;
  Poly x = poly_variable(n, 2, 1);
  CHECK_THROWS_AS(poly_exact_div(x + poly_const(n, 1), x), std::domain_error);
  CHECK_THROWS_AS(poly_exact_div(x, poly_zero(n)), std::domain_error);
  CHECK(poly_exact_div(poly_zero(n), x) == poly_zero(n));
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  std::uint64_t state = 4242;
  int n = 3;
  for (int dim = 1; dim <= 5; ++dim)
    for (int trial = 0; trial < (dim <= 3 ? 10 : 6); ++trial) {
      PolyMatrix m(dim, std::vector<Poly>(dim, poly_zero(n)));
      for (auto& row : m)
        for (auto& e : row) e = random_poly(n, state, 2, 1);
      Poly d1 = poly_det(m);
      Poly d2 = poly_det_cofactor(m);
      CHECK(d1 == d2);
      // a third route: evaluate first, then eliminate over the rationals
      auto point = random_point(n, state);
      CHECK(eval_at(d1, point) == det_q(eval_matrix(m, point)));
    }
}

TEST_CASE("determinant detects singular structure") {
  int n = 2;
  PolyMatrix m(4, std::vector<Poly>(4, poly_zero(n)));
  std::uint64_t state = 11;
  for (int j = 0; j < 4; ++j) {
    m[0][j] = random_poly(n, state, 2, 1);
    m[1][j] = random_poly(n, state, 2, 1);
    m[2][j] = m[0][j] + m[1][j];  // dependent row
    m[3][j] = random_poly(n, state, 2, 1);
  }
  CHECK(poly_det(m).is_zero());
  CHECK(poly_det(poly_identity(n, 5)) == poly_const(n, 1));
  PolyMatrix bad(2, std::vector<Poly>(3, poly_zero(n)));
  CHECK_THROWS_AS(poly_det(bad), std::invalid_argument);
}

TEST_CASE("rational determinants multiply and detect rank") {
  std::uint64_t state = 99;
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 + static_cast<int>(splitmix64(state) % 4);
    QMatrix a(dim, std::vector<Rational>(dim)), b(dim, std::vector<Rational>(dim));
    for (auto& row : a)
      for (auto& e : row) e = random_rat(state, 5);
    for (auto& row : b)
      for (auto& e : row) e = random_rat(state, 5);
    CHECK(det_q(mat_mul(a, b)) == det_q(a) * det_q(b));
    int ra = rank_q(a);
    CHECK((det_q(a) != 0) == (ra == dim));
    // duplicating columns cannot raise the rank
    QMatrix doubled(dim);
    for (int r = 0; r < dim; ++r) {
      doubled[r] = a[r];
      doubled[r].insert(doubled[r].end(), a[r].begin(), a[r].end());
    }
    CHECK_EQ(rank_q(doubled), ra);
  }
}

TEST_CASE("vandermonde closed form") {
  std::uint64_t state = 123;
  for (int trial = 0; trial < 20; ++trial) {
    int dim = 2 + static_cast<int>(splitmix64(state) % 4);
    std::vector<Rational> vals(dim);
    for (auto& v : vals) v = random_rat(state, 6);
    QMatrix m(dim, std::vector<Rational>(dim));
    for (int r = 0; r < dim; ++r) {
      Rational p = 1;
      for (int c = 0; c < dim; ++c) {
        m[r][c] = p;
        p *= vals[r];
      }
    }
    CHECK(det_q(m) == vandermonde_det(vals));
  }
}

TEST_CASE("loop window bookkeeping") {
  int n = 2;
  Poly one = poly_const(n, 1);
  Poly a = poly_variable(n, 2, 1);

  LoopPoly u = loop_zero(n, 0, 5);
  loop_add_term(u, 0, one);
  loop_add_term(u, 2, a);
  CHECK(loop_coefficient(u, 2) == a);
  CHECK(loop_coefficient(u, 1).is_zero());
  CHECK_THROWS_AS(loop_coefficient(u, 6), PrecisionError);
  CHECK_THROWS_AS(loop_add_term(u, -1, one), PrecisionError);

  LoopPoly v = loop_zero(n, 1, 4);
  loop_add_term(v, 1, a);
  LoopPoly sum = u + v;
  CHECK_EQ(sum.lo, 0);
  CHECK_EQ(sum.hi, 4);
  CHECK(loop_coefficient(sum, 1) == a);
  CHECK(loop_coefficient(sum, 2) == a);

  LoopPoly prod = u * v;
  CHECK_EQ(prod.lo, 1);
  // exactness bound: min(u.lo + v.hi, v.lo + u.hi) = min(4, 6)
  CHECK_EQ(prod.hi, 4);
  CHECK(loop_coefficient(prod, 1) == a);          // t^0 * t^1 a
  CHECK(loop_coefficient(prod, 3) == a * a);      // t^2 a * t^1 a
  CHECK_THROWS_AS(loop_coefficient(prod, 5), PrecisionError);

  LoopPoly lowneg = loop_zero(n, -2, 1);
  loop_add_term(lowneg, -2, one);
  LoopPoly shifted = lowneg * v;
  CHECK_EQ(shifted.lo, -1);
  CHECK_EQ(shifted.hi, 2);  // min(-2 + 4, 1 + 1)
  CHECK(loop_coefficient(shifted, -1) == a);

  // a product of nonempty windows is never empty; only empty inputs trip it
  CHECK_THROWS_AS(loop_zero(n, 0, 3) * loop_zero(n, 5, 4), PrecisionError);
}

TEST_CASE("geometric series inverts one minus t within the window") {
  int n = 2;
  Poly one = poly_const(n, 1);
  Poly a = poly_variable(n, 2, 1);
  int hi = 6;
  LoopPoly lhs = loop_zero(n, 0, hi);
  loop_add_term(lhs, 0, one);
  loop_add_term(lhs, 1, -a);
  LoopPoly series = loop_zero(n, 0, hi);
  Poly pw = one;
  for (int k = 0; k <= hi; ++k) {
    loop_add_term(series, k, pw);
    pw = pw * a;
  }
  LoopPoly prod = lhs * series;
  CHECK_EQ(prod.lo, 0);
  CHECK_EQ(prod.hi, hi);
  CHECK(loop_coefficient(prod, 0) == one);
  for (int k = 1; k <= hi; ++k) CHECK(loop_coefficient(prod, k).is_zero());
}

TEST_CASE("loop matrices multiply with window tracking") {
  int n = 2;
  LoopMatrix id = loop_identity(n, 3, 0, 4);
  LoopMatrix m(3, std::vector<LoopPoly>(3, loop_zero(n, 0, 4)));
  std::uint64_t state = 5;
  for (auto& row : m)
    for (auto& e : row)
      for (int k = 0; k <= 4; ++k)
        if (splitmix64(state) % 2) loop_add_term(e, k, random_poly(n, state, 1, 1));
  LoopMatrix prod = loop_mul(id, m);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(loop_equal_on_common_window(prod[r][c], m[r][c]));
}
