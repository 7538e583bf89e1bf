#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vsr/group_catalog.hpp"
#include "vsr/metric_builder.hpp"  // contract()
#include "vsr/tensor_space.hpp"

using namespace vsr;

namespace {
Rat q(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

DeformationParams params(
    std::initializer_list<std::pair<const char*, Rat>> kv) {
  DeformationParams p;
  for (const auto& [k, v] : kv) p.assignments.emplace(k, v);
  return p;
}

TensorVector eta() {
  RatVec c(16, Rat(0));
  c[0] = q(-1);
  c[5] = c[10] = c[15] = q(1);
  return tensor_from_components(2, c);
}

TensorVector spurion() {
  return tensor_from_components(1, {q(1), q(0), q(0), q(1)});
}

const RatMatrix& phi_of(const GroupInstance& g, const std::string& sym) {
  static RatMatrix m;
  for (const auto& it : g.generators)
    if (it.symbol == sym) {
      m = linear_part(it);
      return m;
    }
  throw std::runtime_error("generator not found");
}
}  // namespace

TEST_CASE("tensor_dim and rank bounds") {
  CHECK(tensor_dim(1) == 4);
  CHECK(tensor_dim(2) == 16);
  CHECK(tensor_dim(3) == 64);
  CHECK(tensor_dim(4) == 256);
  CHECK_THROWS_AS(tensor_dim(0), RankOutOfRange);
  CHECK_THROWS_AS(tensor_dim(5), RankOutOfRange);
  CHECK_THROWS_AS(tensor_from_components(2, RatVec(7, Rat(0))),
                  std::invalid_argument);
}

TEST_CASE("induced derivation operator is linear in phi") {
  auto g = instantiate(GroupId::DISIM,
                       params({{"A1", q(1, 3)}, {"A2", q(1, 4)}}));
  const auto& a = phi_of(g, "r_z");
  const auto& b = phi_of(g, "b_z");
  for (int rank = 1; rank <= 3; ++rank) {
    auto la = induced_derivation_operator(a, rank);
    auto lb = induced_derivation_operator(b, rank);
    auto lab = induced_derivation_operator(a + b.scaled(q(3)), rank);
    CHECK(lab == la + lb.scaled(q(3)));
  }
}

TEST_CASE("rank-1 derivation is phi transpose") {
  RatMatrix phi(4, 4);
  phi(0, 3) = q(2);
  phi(1, 2) = q(-1, 3);
  auto l = induced_derivation_operator(phi, 1);
  CHECK(l == phi.transposed());
}

TEST_CASE("weight additivity under tensor products") {
  // DISIM spurion: L N = (1+A2) N  =>  L (N⊗N) = 2(1+A2) N⊗N.
  const Rat a2 = q(1, 4);
  auto g = instantiate(GroupId::DISIM, params({{"A1", q(0)}, {"A2", a2}}));
  const auto& phi = phi_of(g, "b_z");
  auto l1 = induced_derivation_operator(phi, 1);
  auto n = spurion();
  CHECK(l1.apply(n.components) ==
        RatVec{1 + a2, q(0), q(0), 1 + a2});
  auto nn = tensor_product(n, n);
  auto l2 = induced_derivation_operator(phi, 2);
  RatVec expect = nn.components;
  for (auto& e : expect) e *= 2 * (1 + a2);
  CHECK(l2.apply(nn.components) == expect);
  // Minkowski metric carries weight 2*A2 under the deformed boost.
  auto e2 = eta();
  RatVec expect_eta = e2.components;
  for (auto& e : expect_eta) e *= 2 * a2;
  CHECK(l2.apply(e2.components) == expect_eta);
}

TEST_CASE("classify_symmetry") {
  CHECK(classify_symmetry(eta()) == SymmetryClass::symmetric);
  RatVec anti(16, Rat(0));
  anti[1] = q(1);
  anti[4] = q(-1);
  CHECK(classify_symmetry(tensor_from_components(2, anti)) ==
        SymmetryClass::antisymmetric);
  RatVec mixed(16, Rat(0));
  mixed[1] = q(1);
  CHECK(classify_symmetry(tensor_from_components(2, mixed)) ==
        SymmetryClass::mixed);
  CHECK_THROWS_AS(classify_symmetry(spurion()), RankOutOfRange);
}

TEST_CASE("symmetrized product contracts multiplicatively") {
  auto n = spurion();
  auto e2 = eta();
  auto s = symmetrized_product(n, e2);
  CHECK(s.rank == 3);
  CHECK(classify_symmetry(s) == SymmetryClass::symmetric);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    RatVec y = {q(d(rng)), q(d(rng)), q(d(rng)), q(d(rng))};
    // v_(s g_mn) contracted three times = 3 (v.y)(g.yy).
    CHECK(contract(s, y) == 3 * contract(n, y) * contract(e2, y));
  }
}

TEST_CASE("tensor product ranks add and cannot exceed 4") {
  auto n = spurion();
  auto p2 = tensor_product(n, n);
  CHECK(p2.rank == 2);
  CHECK(p2.components[3] == 1);   // N_t N_z
  CHECK(p2.components[15] == 1);  // N_z N_z
  auto p4 = tensor_product(p2, p2);
  CHECK(p4.rank == 4);
  CHECK_THROWS_AS(tensor_product(p4, n), RankOutOfRange);
}

TEST_CASE("in_span_of_products recognizes derived rank-3 tensors") {
  auto n = spurion();
  auto e2 = eta();
  auto s = symmetrized_product(n, e2);
  TensorVector scaled{3, s.components};
  for (auto& c : scaled.components) c *= q(-1, 2);
  auto coeffs = in_span_of_products(scaled, {n}, {e2});
  REQUIRE(coeffs.has_value());
  CHECK(*coeffs == RatVec{q(-1, 2)});
  // Something outside the span is rejected.
  RatVec odd(64, Rat(0));
  odd[0] = q(1);
  CHECK(!in_span_of_products(tensor_from_components(3, odd), {n}, {e2})
             .has_value());
}
