#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vsr/finsler_kernel.hpp"

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

MetricField group_field(GroupId id, DeformationParams p) {
  auto g = instantiate(id, p);
  auto monos = default_monomials(g);
  return field_from_metric(assemble_metric(monos, solve_exponents(monos)));
}

// The canonical (RREF, leading entry +1) Minkowski basis tensor is
// diag(1, -1, -1, -1), the overall-sign flip of eta.
constexpr double kMink[4] = {1.0, -1.0, -1.0, -1.0};
}  // namespace

TEST_CASE("Poincare fundamental tensor is Minkowski everywhere") {
  auto f = group_field(GroupId::Poincare, {});
  const Vec4 x = {0, 0, 0, 0};
  for (const Vec4& y : {Vec4{2, 0, 0, 1}, Vec4{0.3, 1.2, -0.7, 0.1},
                        Vec4{1, 2, 3, 4}}) {
    auto g = fundamental_tensor(f, x, y);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(g[a][b] == doctest::Approx(a == b ? kMink[a] : 0.0)
                             .epsilon(1e-7)
                             .scale(1.0));
    auto gi = invert4(g);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double id = 0;
        for (int c = 0; c < 4; ++c) id += g[a][c] * gi[c][b];
        CHECK(id == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-7).scale(1.0));
      }
  }
}

TEST_CASE("Cartan dichotomy: Poincare vs DISIMb") {
  const Vec4 x = {0, 0, 0, 0};
  const Vec4 y = {2, 0, 0, 1};
  auto mink = group_field(GroupId::Poincare, {});
  CHECK(std::abs(cartan_scalar(mink, x, y)) <= 1e-8);

  auto disim = group_field(GroupId::DISIMb, params({{"A2", q(1, 3)}}));
  // Two step sizes must agree: the nonzero value is not differencing
  // noise. Third y-derivatives need a coarser step than the default.
  double c1 = cartan_scalar(disim, x, y, 1e-3);
  double c2 = cartan_scalar(disim, x, y, 2e-3);
  CHECK(std::abs(c1) >= 1e-3);
  CHECK(std::abs(c2) >= 1e-3);
  CHECK(c1 == doctest::Approx(c2).epsilon(1e-4));
}

TEST_CASE("flat metrics: exact short-circuit and generic differencing") {
  const Vec4 x = {0, 0, 0, 0};
  const Vec4 y = {2, 0.25, -0.5, 1};
  auto f = group_field(GroupId::DISIMb, params({{"A2", q(1, 3)}}));

  auto conn = connections(f, x, y);
  CHECK(conn.exact_zero);
  auto curv = torsion_and_curvature(f, x, y);
  CHECK(curv.exact_zero);

  FinslerOptions generic;
  generic.force_generic = true;
  auto conn_g = connections(f, x, y, generic);
  CHECK(!conn_g.exact_zero);
  auto curv_g = torsion_and_curvature(f, x, y, generic);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        worst = std::max(worst, std::abs(conn_g.chern[a][b][c]));
        worst = std::max(worst, std::abs(curv_g.torsion[a][b][c]));
      }
      worst = std::max(worst, std::abs(curv_g.flag[a][b]));
    }
  CHECK(worst <= 1e-5);
}

TEST_CASE("sphere: Christoffel symbols and constant flag curvature") {
  auto f = sphere_test_field();
  const Vec4 x = {0.0, 1.0, 0.5, 0.0};  // theta = 1.0
  const Vec4 y = {0.0, 0.3, 0.7, 0.0};
  const double th = x[1];

  auto conn = connections(f, x, y);
  CHECK(!conn.exact_zero);
  // Gamma^theta_{phi phi} = -sin(theta) cos(theta)
  CHECK(conn.chern[1][2][2] ==
        doctest::Approx(-std::sin(th) * std::cos(th)).epsilon(1e-4));
  // Gamma^phi_{theta phi} = cot(theta)
  CHECK(conn.chern[2][1][2] ==
        doctest::Approx(std::cos(th) / std::sin(th)).epsilon(1e-4));

  // The torsion stack nests three differencing levels; it needs a much
  // coarser step than the first and second derivatives do.
  FinslerOptions curv_opt;
  curv_opt.h = 1e-2;
  auto curv = torsion_and_curvature(f, x, y, curv_opt);
  auto g = fundamental_tensor(f, x, y);
  // Sphere-block norm of y: the flag curvature predictor uses the metric
  // restricted to the curved block.
  double f2 = y[1] * y[1] + std::sin(th) * std::sin(th) * y[2] * y[2];
  Vec4 ylow = {0, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) ylow[a] += g[a][b] * y[b];
  // Constant curvature K = 1 on the sphere block. With the convention
  // R^sigma_{mu nu} = delta_nu N^sigma_mu - delta_mu N^sigma_nu the flag
  // block reads flag[nu][mu] = -K (F_block^2 delta - y^nu y_mu).
  for (int nu = 1; nu <= 2; ++nu)
    for (int mu = 1; mu <= 2; ++mu) {
      double expect = -((nu == mu ? f2 : 0.0) - y[nu] * ylow[mu]);
      CHECK(curv.flag[nu][mu] == doctest::Approx(expect).epsilon(1e-3).scale(1.0));
    }
}

TEST_CASE("homogeneity check flags a non-homogeneous F^2") {
  MetricField broken;
  broken.evaluator = [](const Vec4&, const Vec4& y) {
    return -y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3] + 1.0;
  };
  const Vec4 x = {0, 0, 0, 0};
  const Vec4 y = {2, 0.25, -0.5, 1};
  CHECK(homogeneity_check(broken, x, y, {0.5, 2.0, 3.0}) > 1e-2);

  auto good = group_field(GroupId::DISIMb, params({{"A2", q(1, 3)}}));
  CHECK(homogeneity_check(good, x, y, {0.5, 2.0, 3.0}) <= 1e-8);
}

TEST_CASE("degenerate metric raises SingularMetric") {
  MetricField degen;
  degen.evaluator = [](const Vec4&, const Vec4& y) {
    double p = y[0] - y[3];  // (N.y)^2 has rank-1 Hessian
    return p * p;
  };
  const Vec4 x = {0, 0, 0, 0};
  const Vec4 y = {2, 0.25, -0.5, 1};
  auto g = fundamental_tensor(degen, x, y);
  CHECK_THROWS_AS(invert4(g), SingularMetric);
  CHECK_THROWS_AS(cartan_scalar(degen, x, y), SingularMetric);
}

TEST_CASE("geometry_report aggregates residuals") {
  auto f = group_field(GroupId::DISIMb, params({{"A2", q(1, 3)}}));
  const Vec4 x = {0, 0, 0, 0};
  const Vec4 y = {2, 0, 0, 1};
  auto rep = geometry_report(f, x, y);
  CHECK(rep.gyy_residual <= 1e-6);
  CHECK(rep.homogeneity_residual <= 1e-8);
  CHECK(rep.g_inverse_residual <= 1e-7);
  CHECK(rep.conn.exact_zero);
  auto j = report_to_json(rep);
  REQUIRE(j.contains("residuals"));
  CHECK(j["residuals"].contains("gyy_vs_F2"));
}
