// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here goes through the public library interface.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vsr/finsler_kernel.hpp"
#include "vsr/group_catalog.hpp"
#include "vsr/invariant_solver.hpp"
#include "vsr/metric_builder.hpp"
#include "vsr/report.hpp"

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

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

MetricField group_field(GroupId id, const DeformationParams& p) {
  auto g = instantiate(id, p);
  auto monos = default_monomials(g);
  return field_from_metric(assemble_metric(monos, solve_exponents(monos)));
}

// ---- criterion 1: the DISIM spurion family ----
Check c1_spurion() {
  Check c;
  auto g = instantiate(GroupId::DISIM, params({{"A1", q(0)}, {"A2", q(1, 3)}}));
  auto fams = conformal_covariants(g, 1);
  c.require(fams.size() == 1, "expected exactly one rank-1 family");
  if (!c.ok) return c;
  c.require(fams[0].basis.dim() == 1, "family is not one-dimensional");
  c.require(fams[0].basis.contains({q(1), q(0), q(0), q(1)}),
            "basis does not contain N = (1,0,0,1)");
  c.require(fams[0].weights.at("b_z") == q(4, 3), "B_z weight != 4/3");
  for (const auto& [sym, w] : fams[0].weights)
    if (sym != "b_z") c.require(w == 0, "unexpected nonzero weight on " + sym);
  return c;
}

// ---- criterion 2: DISIMb exponents (-2A2, 1+A2) ----
Check c2_disimb_exponents() {
  Check c;
  for (const Rat& a2 : {q(1, 3), q(-1, 4)}) {
    auto g = instantiate(GroupId::DISIMb, params({{"A2", a2}}));
    auto monos = default_monomials(g);
    auto sol = solve_exponents(monos);
    c.require(sol.feasible, "solve infeasible at A2 = " + rat_str(a2));
    if (!sol.feasible) return c;
    c.require(sol.kernel.empty(), "unexpected exponent freedom");
    c.require(monos.size() == 2 && monos[0].degree() == 1,
              "monomial list is not (N.y, G.yy)");
    c.require(sol.particular == RatVec{q(-2) * a2, q(1) + a2},
              "exponents != (-2A2, 1+A2) at A2 = " + rat_str(a2));
  }
  return c;
}

// ---- criterion 3: XDISIM2 degenerate direction and diagonalization ----
Check c3_xdisim2() {
  Check c;
  const Rat a1 = q(1, 2), a3 = q(1, 4);
  auto g = instantiate(GroupId::XDISIM2,
                       params({{"A1", a1}, {"A2", q(0)}, {"A3", a3}}), 1);
  auto f2 = conformal_covariants(g, 2);
  RatVec h(16, q(0));
  h[0] = q(-5, 6);
  h[3] = h[12] = q(1, 6);
  h[5] = h[10] = q(1);
  h[15] = q(7, 6);
  const CovariantFamily* hf = nullptr;
  for (const auto& f : f2)
    if (!f.derived_from_rank1 && f.basis.contains(h)) hf = &f;
  c.require(hf != nullptr, "H covariant with entries (-5/6, 1/6, 7/6) missing");
  if (!hf) return c;
  RatMatrix hm(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) hm(i, j) = h[4 * i + j];
  RatVec nv = {q(1), q(0), q(0), q(1)};
  auto lin = solve_affine(hm, nv);
  c.require(lin.feasible, "H v = N infeasible");
  if (!lin.feasible) return c;
  Rat hinv_nn(0);
  for (std::size_t i = 0; i < 4; ++i) hinv_nn += nv[i] * lin.particular[i];
  c.require(hinv_nn == 0, "H^{-1}NN != 0");
  // t-z coordinate change z -> z + k t with k = -(A1-A3)/(1+2A1-A3).
  const Rat k = -(a1 - a3) / (1 + 2 * a1 - a3);
  RatMatrix s = RatMatrix::identity(4);
  s(3, 0) = k;
  RatMatrix hp = s.transposed() * hm * s;
  RatMatrix hdiag(4, 4);
  hdiag(0, 0) = -(1 + a1) / (1 + 2 * a1 - a3);
  hdiag(1, 1) = hdiag(2, 2) = q(1);
  hdiag(3, 3) = (1 + 2 * a1 - a3) / (1 + a1);
  c.require(hp == hdiag, "coordinate change does not diagonalize H exactly");
  return c;
}

// ---- criterion 4: de Sitter rigidity, under 30 s ----
Check c4_desitter() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto g = instantiate(GroupId::deSitter, params({{"lambda", q(1)}}));
  for (int rank = 1; rank <= 4; ++rank) {
    auto fams = conformal_covariants(g, rank);
    std::ostringstream os;
    os << "rank " << rank << " unexpectedly nonempty";
    c.require(fams.empty(), os.str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream os;
  os << "ranks 1-4 took " << secs << " s (budget 30 s)";
  c.require(secs < 30.0, os.str());
  c.detail = c.ok ? os.str() : c.detail;
  return c;
}

// ---- criterion 5: groups with no invariant metric ----
Check c5_negative_rows() {
  Check c;
  struct Row {
    std::string label;
    std::function<GroupInstance()> make;
  };
  std::vector<Row> rows = {
      {"DTE1 (A1=1/4)",
       [] {
         return instantiate(GroupId::DTE1,
                            params({{"A1", q(1, 4)}, {"A2", q(0)}}));
       }},
      {"DTE1 (A2=1/4)",
       [] {
         return instantiate(GroupId::DTE1,
                            params({{"A1", q(0)}, {"A2", q(1, 4)}}));
       }},
      {"DIHOM",
       [] {
         return instantiate(GroupId::DIHOM,
                            params({{"A1", q(1, 2)}, {"A2", q(1, 4)}}));
       }},
      {"DISO3_1 (beta=alpha)",
       [] {
         return instantiate(GroupId::DISO3_1,
                            params({{"alpha", q(1)}, {"beta", q(1)}}));
       }},
      {"DISO3_1 (beta=-alpha)",
       [] {
         return instantiate(GroupId::DISO3_1,
                            params({{"alpha", q(1)}, {"beta", q(-1)}}));
       }},
      {"DISO21_1 (beta=alpha)",
       [] {
         return instantiate(GroupId::DISO21_1,
                            params({{"alpha", q(1)}, {"beta", q(1)}}));
       }},
      {"DISO21_1 (beta=-alpha)",
       [] {
         return instantiate(GroupId::DISO21_1,
                            params({{"alpha", q(1)}, {"beta", q(-1)}}));
       }},
  };
  for (int rep = 1; rep <= 3; ++rep)
    rows.push_back({"DISO3_2 (rep " + std::to_string(rep) + ")", [rep] {
                      return instantiate(GroupId::DISO3_2,
                                         params({{"A1", q(1, 4)}}), rep);
                    }});
  for (int rep = 1; rep <= 2; ++rep)
    rows.push_back({"DISO21_2 (rep " + std::to_string(rep) + ")", [rep] {
                      return instantiate(GroupId::DISO21_2,
                                         params({{"A1", q(1, 4)}}), rep);
                    }});
  for (const auto& row : rows) {
    auto g = row.make();
    auto monos = default_monomials(g);
    bool infeasible = monos.empty() || !solve_exponents(monos).feasible;
    if (!infeasible) {
      // The remaining possibility: non-derived rank-2 content is
      // antisymmetric only, so no metric candidate survives.
      bool symmetric_rank2 = false;
      for (const auto& f : conformal_covariants(g, 2))
        if (!f.derived_from_rank1 &&
            f.symmetry != SymmetryClass::antisymmetric)
          symmetric_rank2 = true;
      c.require(!symmetric_rank2, row.label + ": invariant metric exists");
    }
  }
  return c;
}

// ---- criterion 6: numeric invariance of every Table III metric ----
Check c6_invariance() {
  Check c;
  double worst = 0.0;
  for (const auto& tm : table_three_metrics()) {
    double res = max_invariance_residual(tm.group, tm.spec, 1000, 20260826u,
                                         tm.s);
    worst = std::max(worst, res);
    std::ostringstream os;
    os << tm.name << ": invariance residual " << res << " > 1e-9";
    c.require(res <= 1e-9, os.str());
  }
  if (c.ok) {
    std::ostringstream os;
    os << "worst residual " << worst;
    c.detail = os.str();
  }
  return c;
}

// ---- criterion 7: fundamental-tensor identity g.yy = F^2 ----
Check c7_gyy() {
  Check c;
  double worst = 0.0;
  for (const auto& tm : table_three_metrics()) {
    double res = max_gyy_residual(tm.spec, 200, 20260826u, tm.s);
    worst = std::max(worst, res);
    std::ostringstream os;
    os << tm.name << ": g.yy residual " << res << " > 1e-6";
    c.require(res <= 1e-6, os.str());
  }
  if (c.ok) {
    std::ostringstream os;
    os << "worst residual " << worst;
    c.detail = os.str();
  }
  return c;
}

// ---- criterion 8: Cartan dichotomy ----
Check c8_cartan() {
  Check c;
  const Vec4 x = {0, 0, 0, 0};
  const Vec4 y = {2, 0, 0, 1};
  auto mink = group_field(GroupId::Poincare, {});
  double c_mink = cartan_scalar(mink, x, y);
  c.require(std::abs(c_mink) <= 1e-8, "Poincare Cartan scalar not ~0");
  auto disim = group_field(GroupId::DISIMb, params({{"A2", q(1, 3)}}));
  // Two step sizes pin the value: a genuine tensor, not differencing noise.
  double v1 = cartan_scalar(disim, x, y, 1e-3);
  double v2 = cartan_scalar(disim, x, y, 2e-3);
  c.require(std::abs(v1) >= 1e-3, "DISIMb Cartan scalar below 1e-3");
  c.require(std::abs(v1 - v2) <= 1e-4 * std::abs(v1),
            "step sizes disagree on the Cartan scalar");
  std::ostringstream os;
  os << "Poincare " << c_mink << ", DISIMb " << v1;
  c.detail = os.str();
  return c;
}

// ---- criterion 9: flatness and the curved control case ----
Check c9_flatness() {
  Check c;
  const Vec4 x0 = {0, 0, 0, 0};
  const Vec4 y0 = {2, 0.25, -0.5, 1};
  for (const auto& id : {GroupId::DISIMb, GroupId::ISIM}) {
    DeformationParams p =
        id == GroupId::DISIMb ? params({{"A2", q(1, 3)}}) : DeformationParams{};
    auto f = group_field(id, p);
    auto conn = connections(f, x0, y0);
    auto curv = torsion_and_curvature(f, x0, y0);
    c.require(conn.exact_zero && curv.exact_zero,
              group_name(id) + ": short-circuit did not certify flatness");
    FinslerOptions generic;
    generic.force_generic = true;
    auto conn_g = connections(f, x0, y0, generic);
    auto curv_g = torsion_and_curvature(f, x0, y0, generic);
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d) {
          worst = std::max(worst, std::abs(conn_g.chern[a][b][d]));
          worst = std::max(worst, std::abs(curv_g.torsion[a][b][d]));
        }
    c.require(worst <= 1e-5,
              group_name(id) + ": generic differencing not flat");
  }
  // Curved control: the round sphere.
  auto sph = sphere_test_field();
  const Vec4 x = {0.0, 1.0, 0.5, 0.0};
  const Vec4 y = {0.0, 0.3, 0.7, 0.0};
  auto conn = connections(sph, x, y);
  const double th = x[1];
  c.require(std::abs(conn.chern[1][2][2] + std::sin(th) * std::cos(th)) <=
                1e-4,
            "sphere Gamma^theta_{phi phi} != -sin cos");
  // Torsion nests three differencing levels and needs a coarser step.
  FinslerOptions curv_opt;
  curv_opt.h = 1e-2;
  auto curv = torsion_and_curvature(sph, x, y, curv_opt);
  auto g = fundamental_tensor(sph, x, y);
  double f2 = y[1] * y[1] + std::sin(th) * std::sin(th) * y[2] * y[2];
  Vec4 ylow = {0, 0, 0, 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) ylow[a] += g[a][b] * y[b];
  // With R^s_{mn} = delta_n N^s_m - delta_m N^s_n the constant-curvature
  // prediction carries an overall minus sign.
  for (int nu = 1; nu <= 2; ++nu)
    for (int mu = 1; mu <= 2; ++mu) {
      double expect = -((nu == mu ? f2 : 0.0) - y[nu] * ylow[mu]);
      c.require(std::abs(curv.flag[nu][mu] - expect) <=
                    1e-3 * std::max(1.0, std::abs(expect)),
                "sphere flag curvature != 1");
    }
  return c;
}

// ---- criterion 10: zero-degree invariants ----
Check c10_zero_degree() {
  Check c;
  {
    auto g = instantiate(GroupId::ISIM, {});
    c.require(zero_degree_invariants(default_monomials(g)).empty(),
              "ISIM admits a non-constant zero-degree invariant");
  }
  {
    auto g = instantiate(GroupId::DTE3b, params({{"A1", q(0)}, {"A2", q(0)}}));
    auto monos = default_monomials(g);
    auto invs = zero_degree_invariants(monos);
    c.require(!invs.empty(), "DTE3b zero-degree space empty");
    std::size_t i1 = monos.size(), i2 = monos.size();
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (i1 == monos.size() && monos[i].degree() == 1) i1 = i;
      if (i2 == monos.size() && monos[i].degree() == 2) i2 = i;
    }
    c.require(i1 < monos.size() && i2 < monos.size(),
              "DTE3b monomial list incomplete");
    if (i1 < monos.size() && i2 < monos.size() && !invs.empty()) {
      RatVec target(monos.size(), q(0));
      target[i1] = q(2);
      target[i2] = q(-1);
      c.require(span_of(monos.size(), invs).contains(target),
                "DTE3b invariants exclude (N.y)^2/(G.yy)");
    }
  }
  for (const auto& id : {GroupId::ISO3, GroupId::ISO21}) {
    auto g = instantiate(id, {});
    auto monos = default_monomials(g);
    auto invs = zero_degree_invariants(monos);
    c.require(!invs.empty(), group_name(id) + " zero-degree space empty");
    std::size_t i1 = monos.size(), i2 = monos.size();
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (i1 == monos.size() && monos[i].degree() == 1) i1 = i;
      if (i2 == monos.size() && monos[i].degree() == 2) i2 = i;
    }
    if (i1 < monos.size() && i2 < monos.size() && !invs.empty()) {
      RatVec target(monos.size(), q(0));
      target[i1] = q(2);
      target[i2] = q(-1);
      c.require(span_of(monos.size(), invs).contains(target),
                group_name(id) + " invariants exclude (v.y)^2/(G.yy)");
    }
  }
  return c;
}

// ---- criterion 11: golden table reproduction ----
Check c11_tables() {
  Check c;
  auto rows = reproduce_tables();
  c.require(tables_pass(rows), "a table row mismatches");
  int noted = 0;
  std::vector<std::string> noted_groups;
  for (const auto& r : rows)
    if (r.status == "discrepancy-noted") {
      ++noted;
      noted_groups.push_back(r.group);
    }
  std::ostringstream os;
  os << noted << " discrepancy-noted rows (expected exactly 2)";
  c.require(noted == 2, os.str());
  if (c.ok) c.detail = noted_groups[0] + ", " + noted_groups[1] + " noted";
  return c;
}

// ---- criterion 12: property suites ----
Check c12_properties() {
  Check c;
  std::mt19937 rng(20260826u);
  std::uniform_real_distribution<double> theta(-1.0, 1.0);

  // One-parameter law: exp((s+t)M) = exp(sM) exp(tM) for every generator.
  auto g = instantiate(GroupId::DISIM, params({{"A1", q(0)}, {"A2", q(1, 3)}}));
  for (const auto& gen : g.generators)
    for (int trial = 0; trial < 5; ++trial) {
      double s = theta(rng), t = theta(rng);
      auto lhs = one_parameter_element(gen, s + t);
      auto a = one_parameter_element(gen, s);
      auto b = one_parameter_element(gen, t);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          double acc = 0.0;
          for (int k = 0; k < 5; ++k) acc += a[5 * i + k] * b[5 * k + j];
          c.require(std::abs(acc - lhs[5 * i + j]) <= 1e-12,
                    "one-parameter subgroup law violated for " + gen.symbol);
        }
    }

  // Weight additivity: L(N x N) = 2w N x N when L N = w N, exactly.
  {
    auto fams = conformal_covariants(g, 1);
    c.require(fams.size() == 1, "spurion family missing");
    if (fams.size() == 1) {
      TensorVector n{1, fams[0].basis.vectors[0]};
      auto nn = tensor_product(n, n);
      for (const auto& gen : g.generators) {
        auto l2 = induced_derivation_operator(linear_part(gen), 2);
        RatVec lhs = l2.apply(nn.components);
        Rat w2 = q(2) * fams[0].weights.at(gen.symbol);
        for (std::size_t i = 0; i < lhs.size(); ++i)
          c.require(lhs[i] == w2 * nn.components[i],
                    "weights not additive under tensor product");
      }
    }
  }

  // Solver soundness: exact eigen-residual for every family, ranks 1-2.
  for (int rank = 1; rank <= 2; ++rank)
    for (const auto& f : conformal_covariants(g, rank))
      for (const auto& gen : g.generators) {
        auto l = induced_derivation_operator(linear_part(gen), rank);
        const Rat w = f.weights.at(gen.symbol);
        for (const auto& v : f.basis.vectors) {
          RatVec lhs = l.apply(v);
          for (std::size_t i = 0; i < v.size(); ++i)
            c.require(lhs[i] == w * v[i], "solver family fails L G = w G");
        }
      }

  // Solver completeness vs brute force, rank 2, 4 generators.
  {
    auto fams = conformal_covariants(g, 2);
    std::map<std::string, RatMatrix> ops;
    for (const auto& gen : g.generators)
      ops.emplace(gen.symbol,
                  induced_derivation_operator(linear_part(gen), 2));
    auto spectrum = [&](const std::string& sym) {
      const auto& m = ops.at(sym);
      std::vector<double> d(256);
      for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
          d[16 * i + j] = rat_double(m(i, j));
      std::set<Rat> out;
      for (const auto& [lam, mult] : real_eigenvalues(d, 16))
        out.insert(rationalize(lam, 1000000));
      return out;
    };
    auto kernel_of = [&](const std::string& sym, const Rat& w) {
      return null_space(ops.at(sym) - RatMatrix::identity(16).scaled(w));
    };
    int spaces = 0;
    for (const Rat& wr : spectrum("r_z"))
      for (const Rat& wb : spectrum("b_z")) {
        auto space = intersect(kernel_of("r_z", wr), kernel_of("b_z", wb));
        space = intersect(space, kernel_of("t_1", q(0)));
        space = intersect(space, kernel_of("t_2", q(0)));
        if (space.empty()) continue;
        ++spaces;
        bool matched = false;
        for (const auto& f : fams)
          if (f.basis == space && f.weights.at("r_z") == wr &&
              f.weights.at("b_z") == wb)
            matched = true;
        c.require(matched, "solver missed a brute-force joint eigenspace");
      }
    c.require(spaces == static_cast<int>(fams.size()),
              "solver family count differs from brute force");
  }

  // Homogeneity of every Table III metric at seeded sample points, and
  // degree-0 homogeneity of its fundamental tensor.
  std::uniform_real_distribution<double> comp(-2.0, 2.0);
  for (const auto& tm : table_three_metrics()) {
    auto field = field_from_metric(tm.spec, tm.s);
    const Vec4 x = {0, 0, 0, 0};
    int done = 0;
    for (int attempt = 0; attempt < 500 && done < 20; ++attempt) {
      Vec4 y = {comp(rng), comp(rng), comp(rng), comp(rng)};
      double f2;
      try {
        f2 = field.evaluator(x, y);
      } catch (const DomainError&) {
        continue;
      }
      if (std::abs(f2) < 1e-1) continue;
      double hres = homogeneity_check(field, x, y, {0.5, 2.0, 3.0});
      if (!std::isfinite(hres)) continue;
      c.require(hres <= 1e-8, tm.name + ": F^2 not 2-homogeneous");
      try {
        auto g1 = fundamental_tensor(field, x, y);
        Vec4 y2 = {2 * y[0], 2 * y[1], 2 * y[2], 2 * y[3]};
        auto g2 = fundamental_tensor(field, x, y2);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            c.require(std::abs(g1[a][b] - g2[a][b]) <=
                          1e-5 * std::max(1.0, std::abs(g1[a][b])),
                      tm.name + ": g not 0-homogeneous");
      } catch (const DomainError&) {
        continue;
      } catch (const StepTooLarge&) {
        continue;
      }
      ++done;
    }
    c.require(done >= 10, tm.name + ": too few usable sample points");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int num;
    std::string desc;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "DISIM(A1=0, A2=1/3) rank-1 spurion family with B_z weight 4/3",
       c1_spurion},
      {2, "DISIMb exponents (-2A2, 1+A2) at A2 = 1/3 and -1/4",
       c2_disimb_exponents},
      {3, "XDISIM2 H covariant, H^{-1}NN = 0, exact diagonalization",
       c3_xdisim2},
      {4, "de Sitter admits no covariants at ranks 1-4", c4_desitter},
      {5, "deformation-obstructed groups admit no invariant metric",
       c5_negative_rows},
      {6, "Table III metrics numerically invariant (1000 samples, 1e-9)",
       c6_invariance},
      {7, "fundamental tensor satisfies g.yy = F^2 (200 points, 1e-6)",
       c7_gyy},
      {8, "Cartan scalar: ~0 for Poincare, >= 1e-3 for DISIMb", c8_cartan},
      {9, "flatness certificates and sphere curvature control", c9_flatness},
      {10, "zero-degree invariants match the recorded families",
       c10_zero_degree},
      {11, "golden tables reproduce with exactly two noted discrepancies",
       c11_tables},
      {12, "property suites: subgroup law, weights, solver, homogeneity",
       c12_properties},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s — %s%s%s\n", cr.num,
                c.ok ? "PASS" : "FAIL", cr.desc.c_str(),
                c.detail.empty() ? "" : " — ", c.detail.c_str());
    if (!c.ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
