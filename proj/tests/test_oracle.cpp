#include "asf/oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "asf/affine_weyl.hpp"
#include "asf/certificate.hpp"
#include "asf/monomial.hpp"
#include "asf/springer_matrix.hpp"
#include "test_util.hpp"

using namespace asf;

namespace {

// All elements reachable by words of length <= len, both sides.
std::vector<AffineWeylElement> ball(int n, int len) {
  std::set<AffineWeylElement> seen{identity_element(n)};
  std::vector<AffineWeylElement> frontier{identity_element(n)};
  for (int step = 0; step < len; ++step) {
    std::vector<AffineWeylElement> next;
    for (const auto& w : frontier)
      for (int i = 0; i < n; ++i) {
        for (const auto& p : {multiply(simple_reflection(n, i), w),
                              multiply(w, simple_reflection(n, i))})
          if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

int pool_precision(const std::vector<AffineWeylElement>& pool) {
  Int far = 0;
  for (const auto& z : pool)
    for (Int t : z.trans) far = std::max(far, t < 0 ? -t : t);
  return static_cast<int>(far) + 2;
}

}  // namespace

TEST_CASE("standard chain generators sit one slot above each floor") {
  AffineWeylElement s1 = simple_reflection(2, 1);
  LatticeChain c = standard_chain(s1);
  REQUIRE(c.n == 2);
  REQUIRE(c.gens.size() == 2);
  // First module: e_2 and t e_1; second module: e_2 and e_1.
  CHECK(c.gens[0][0][1] == QLaurent({{0, rat(1)}}));
  CHECK(c.gens[0][0][0].empty());
  CHECK(c.gens[0][1][0] == QLaurent({{1, rat(1)}}));
  CHECK(c.gens[1][0][1] == QLaurent({{0, rat(1)}}));
  CHECK(c.gens[1][1][0] == QLaurent({{0, rat(1)}}));

  AffineWeylElement tau = translation({1, -1});
  LatticeChain ct = standard_chain(tau);
  CHECK(ct.gens[0][0][0] == QLaurent({{-1, rat(1)}}));
  CHECK(ct.gens[0][1][1] == QLaurent({{2, rat(1)}}));
  CHECK(ct.gens[1][1][1] == QLaurent({{1, rat(1)}}));
}

TEST_CASE("every lattice point attracts itself") {
  for (int n : {2, 3}) {
    auto pool = ball(n, 2);
    int p = pool_precision(pool);
    for (const auto& z : pool) CHECK(in_attracting_nbhd(standard_chain(z), z, p));
  }
}

TEST_CASE("distinct lattice points never attract each other at rank two") {
  auto pool = ball(2, 3);
  REQUIRE(pool.size() >= 7);
  int p = pool_precision(pool);
  for (const auto& z : pool)
    for (const auto& y : pool) {
      bool verdict = in_attracting_nbhd(standard_chain(z), y, p);
      CHECK(verdict == (z == y));
    }
}

TEST_CASE("zero entry values collapse the marked point onto the label's own chain") {
  AffineWeylElement id2 = identity_element(2);
  std::vector<Rational> zeros(var_count(2), rat(0));
  LatticeChain c = component_chain(id2, default_spectral(2), zeros);
  CHECK(c.gens == standard_chain(id2).gens);
  CHECK(in_attracting_nbhd(c, id2, 3));
  CHECK(!in_attracting_nbhd(c, simple_reflection(2, 1), 3));

  AffineWeylElement s0 = simple_reflection(3, 0);
  LatticeChain c3 = component_chain(s0, default_spectral(3), std::vector<Rational>(var_count(3), rat(0)));
  CHECK(c3.gens == standard_chain(s0).gens);
  CHECK(in_attracting_nbhd(c3, s0, 4));
  CHECK(!in_attracting_nbhd(c3, identity_element(3), 4));
}

TEST_CASE("generic entries attract exactly the interval under the longest coset image") {
  for (int n : {2, 3}) {
    for (const auto& x : enumerate_fundamental_box(n)) {
      auto expected = sorted_canonical(bruhat_interval_below(multiply(w0(n), x)));
      auto got = oracle_fixed_point_set(x, default_spectral(n), 20240 + n);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("oracle agrees with the determinant-based fixed point run") {
  AffineWeylElement x = simple_reflection(3, 0);
  SpectralParams sp = default_spectral(3);
  FixedPointOptions opt;
  opt.method = Method::Certificate;
  FixedPointResult res = fixed_point_set(x, sp, opt);
  REQUIRE(res.matches_expected);
  auto got = oracle_fixed_point_set(x, sp, 99);
  CHECK(got == res.members);
}

TEST_CASE("widening the window never changes a stable verdict") {
  AffineWeylElement x = simple_reflection(3, 0);
  SpectralParams sp = default_spectral(3);
  LatticeChain c = component_chain(x, sp, random_assignment(var_count(3), 7));
  for (const auto& y : ball(3, 2)) {
    bool a = in_attracting_nbhd(c, y, 4);
    CHECK(a == in_attracting_nbhd(c, y, 5));
    CHECK(a == in_attracting_nbhd(c, y, 8));
  }
  auto base = oracle_fixed_point_set(x, sp, 7);
  auto wide = oracle_fixed_point_set(x, sp, 7, 8);
  CHECK(base == wide);
}

TEST_CASE("sampling certifies members and never certifies outsiders") {
  SpectralParams sp = default_spectral(2);
  AffineWeylElement id2 = identity_element(2);
  CHECK(membership_sample_witness(id2, id2, sp, 1, 0) == 0);

  // Beyond the ceiling: no assignment may ever land in that neighborhood.
  AffineWeylElement far = translation({1, -1});
  REQUIRE(is_min_coset_rep(far));
  REQUIRE(!bruhat_leq(far, w0(2)));
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL})
    CHECK(!membership_sample(id2, far, sp, 5, seed));

  // Against the expected set, elementwise, for every rank-2 component.
  for (const auto& x : enumerate_fundamental_box(2)) {
    auto expected = orbit_closure_fixed_points(x);
    std::set<AffineWeylElement> in(expected.begin(), expected.end());
    for (const auto& y : ball(2, 3))
      if (is_min_coset_rep(y))
        CHECK(membership_sample(x, y, sp, 5, 31) == static_cast<bool>(in.count(y)));
  }
}

TEST_CASE("outer bound lists the interval and bounds every oracle run") {
  AffineWeylElement id2 = identity_element(2);
  auto bound = orbit_closure_fixed_points(id2);
  REQUIRE(bound.size() == 2);
  CHECK(bound[0] == identity_element(2));
  CHECK(bound[1] == simple_reflection(2, 1));
  for (int n : {2, 3})
    for (const auto& x : enumerate_fundamental_box(n)) {
      auto outer = orbit_closure_fixed_points(x);
      auto inner = oracle_fixed_point_set(x, default_spectral(n), 5);
      std::set<AffineWeylElement> o(outer.begin(), outer.end());
      for (const auto& z : inner) CHECK(o.count(z) == 1);
      CHECK(outer.size() == bruhat_interval_below(multiply(w0(n), x)).size());
    }
  CHECK_THROWS_AS(orbit_closure_fixed_points(simple_reflection(2, 1)), std::invalid_argument);
}

TEST_CASE("finite coordinate permutations transport neighborhoods") {
  SpectralParams sp = default_spectral(2);
  AffineWeylElement id2 = identity_element(2);
  AffineWeylElement s1 = simple_reflection(2, 1);
  LatticeChain c = component_chain(id2, sp, random_assignment(var_count(2), 11));
  LatticeChain moved = c;
  for (auto& gens : moved.gens)
    for (auto& g : gens) std::swap(g[0], g[1]);
  for (const auto& y : ball(2, 2)) {
    bool direct = in_attracting_nbhd(c, y, 4);
    bool transported = in_attracting_nbhd(moved, multiply(s1, y), 4);
    CHECK(direct == transported);
  }
}

TEST_CASE("a window too small for the generators is refused") {
  LatticeChain c = standard_chain(translation({2, -2}));
  CHECK_THROWS_AS(in_attracting_nbhd(c, identity_element(2), 1), PrecisionError);
}

TEST_CASE("oracle rejects bad arguments") {
  AffineWeylElement s1 = simple_reflection(2, 1);
  std::vector<Rational> one(var_count(2), rat(1));
  CHECK_THROWS_AS(component_chain(s1, default_spectral(2), one), std::invalid_argument);
  CHECK_THROWS_AS(component_chain(identity_element(2), default_spectral(2),
                                  std::vector<Rational>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(component_chain(identity_element(2), default_spectral(3), one),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle_fixed_point_set(s1, default_spectral(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(in_attracting_nbhd(standard_chain(s1), identity_element(3), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(in_attracting_nbhd(standard_chain(s1), identity_element(2), 0),
                  std::invalid_argument);
}
