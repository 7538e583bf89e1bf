#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vsr/exact_linalg.hpp"

using namespace vsr;

namespace {
Rat q(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

RatMatrix from_rows(const std::vector<RatVec>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}
}  // namespace

TEST_CASE("rref canonical form and pivots") {
  auto m = from_rows({{q(2), q(4), q(2)}, {q(1), q(2), q(3)}});
  auto pivots = rref(m);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 0);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 0);
  CHECK(m(1, 2) == 1);
}

TEST_CASE("rref is idempotent") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix m(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = q(d(rng), 1 + trial % 3);
    RatMatrix a = m;
    rref(a);
    RatMatrix b = a;
    rref(b);
    CHECK(a == b);
  }
}

TEST_CASE("null_space vectors solve M v = 0 exactly") {
  auto m = from_rows({{q(1), q(2), q(2)}});
  auto ns = null_space(m);
  CHECK(ns.ambient_dim == 3);
  CHECK(ns.dim() == 2);
  for (const auto& v : ns.vectors) {
    Rat dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += m(0, j) * v[j];
    CHECK(dot == 0);
  }
  CHECK(ns.contains({q(2), q(-1), q(0)}));
  CHECK(ns.contains({q(0), q(1), q(-1)}));
  CHECK(!ns.contains({q(1), q(0), q(0)}));
}

TEST_CASE("solve_affine: unique, underdetermined, infeasible") {
  auto a = from_rows({{q(1), q(1)}, {q(1), q(-1)}});
  auto s = solve_affine(a, {q(2), q(0)});
  REQUIRE(s.feasible);
  CHECK(s.particular == RatVec{q(1), q(1)});
  CHECK(s.kernel.empty());

  auto u = solve_affine(from_rows({{q(1), q(2), q(2)}}), {q(2)});
  REQUIRE(u.feasible);
  Rat lhs = u.particular[0] + 2 * u.particular[1] + 2 * u.particular[2];
  CHECK(lhs == 2);
  CHECK(u.kernel.dim() == 2);

  auto bad = solve_affine(from_rows({{q(1), q(1)}, {q(2), q(2)}}),
                          {q(1), q(3)});
  CHECK(!bad.feasible);
}

TEST_CASE("solve_affine round trip on random systems") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    RatMatrix a(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = q(d(rng));
    RatVec x0 = {q(d(rng)), q(d(rng), 3), q(d(rng)), q(d(rng), 2)};
    RatVec b = a.apply(x0);
    auto s = solve_affine(a, b);
    REQUIRE(s.feasible);
    CHECK(a.apply(s.particular) == b);
    for (const auto& k : s.kernel.vectors)
      CHECK(a.apply(k) == RatVec(3, Rat(0)));
  }
}

TEST_CASE("intersect of coordinate planes") {
  auto xy = span_of(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
  auto yz = span_of(3, {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
  auto both = intersect(xy, yz);
  CHECK(both.dim() == 1);
  CHECK(both.contains({q(0), q(1), q(0)}));
  CHECK_THROWS_AS(intersect(xy, span_of(2, {{q(1), q(0)}})),
                  std::invalid_argument);
}

TEST_CASE("span_of canonicalizes dependent spanning sets") {
  auto s1 = span_of(3, {{q(1), q(1), q(0)}, {q(2), q(2), q(0)},
                        {q(0), q(0), q(1)}});
  auto s2 = span_of(3, {{q(0), q(0), q(3)}, {q(-1), q(-1), q(0)}});
  CHECK(s1.dim() == 2);
  CHECK(s1 == s2);
}

TEST_CASE("rationalize recovers exact small-denominator rationals") {
  CHECK(rationalize(0.5, 1000) == q(1, 2));
  CHECK(rationalize(-0.75, 1000) == q(-3, 4));
  CHECK(rationalize(1.0 / 3.0, 1000) == q(1, 3));
  CHECK(rationalize(5.0 / 7.0, 1000) == q(5, 7));
  CHECK(rationalize(4.0, 1000) == q(4));
  CHECK(rationalize(rat_double(q(355, 113)), 1000) == q(355, 113));
}

TEST_CASE("matrix algebra") {
  auto a = from_rows({{q(1), q(2)}, {q(3), q(4)}});
  CHECK(RatMatrix::identity(2) * a == a);
  CHECK(a.transposed()(0, 1) == 3);
  CHECK((a + a.scaled(q(-1))).is_zero());
  CHECK(a.apply({q(1), q(1)}) == RatVec{q(3), q(7)});
}

TEST_CASE("real_eigenvalues with multiplicities") {
  std::vector<double> m = {1, 0, 0, 0, 2, 0, 0, 0, 2};
  auto ev = real_eigenvalues(m, 3);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].first == doctest::Approx(1.0));
  CHECK(ev[0].second == 1);
  CHECK(ev[1].first == doctest::Approx(2.0));
  CHECK(ev[1].second == 2);
}
