#pragma once

#include <array>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "vsr/metric_builder.hpp"

namespace vsr {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Ten3 = std::array<Mat4, 4>;   // T[a][b][c]
using Ten4 = std::array<Ten3, 4>;   // T[a][b][c][d]

/// A Finsler norm squared F²(x, y). `domain` may be empty (everywhere).
struct MetricField {
  std::function<double(const Vec4& x, const Vec4& y)> evaluator;
  bool x_dependent = false;
  std::function<bool(const Vec4& x, const Vec4& y)> domain;
};

struct FinslerOptions {
  double h = 1e-4;           // relative y-step (scaled by |y|)
  double hx = 1e-3;          // absolute x-step
  double singular_tol = 1e-8;
  bool force_generic = false;  // bypass the x-independent short-circuit
};

/// Wraps an assembled x-independent metric (e.g. for flatness checks).
MetricField field_from_metric(MetricSpec spec, ScalarFn s = {});

/// Round 2-sphere padded to 4 dimensions:
/// F² = y₀² + y₁² + sin²(x¹)·y₂² + y₃², coordinates (t, θ, φ, w).
MetricField sphere_test_field();

/// g_{μν} = ½ ∂̇_μ∂̇_ν F², central differences with step h·‖y‖ and one
/// Richardson extrapolation level, then symmetrized.
/// Throws DomainError (base point outside domain, y = 0) and
/// StepTooLarge (stencil exits domain).
Mat4 fundamental_tensor(const MetricField& f, const Vec4& x, const Vec4& y,
                        double h = 1e-4);

/// Exact inverse via partial-pivot elimination; SingularMetric if the
/// pivot falls below tol · max|g|.
Mat4 invert4(const Mat4& g, double tol = 1e-8);

/// max over λ of |F²(x,λy) − λ²F²(x,y)| / |λ²F²(x,y)|.
double homogeneity_check(const MetricField& f, const Vec4& x, const Vec4& y,
                         const std::vector<double>& lambda_samples);

/// C_{αβσ} = ½ ∂̇_σ g_{αβ}, fully symmetrized.
Ten3 cartan_tensor(const MetricField& f, const Vec4& x, const Vec4& y,
                   double h = 1e-4);

/// C = g^{μν} C_μ C_ν with C_μ = C_{μαβ} g^{αβ}. Throws SingularMetric.
double cartan_scalar(const MetricField& f, const Vec4& x, const Vec4& y,
                     double h = 1e-4, double singular_tol = 1e-8);

struct Connections {
  bool exact_zero = false;  // x-independent short-circuit certificate
  Vec4 spray{};             // G^μ
  Mat4 nonlinear{};         // N[ν][μ] = N^ν_μ
  Ten3 chern{};             // Γ[σ][μ][ν] = Γ^σ_{μν}
  Ten3 berwald{};           // G[σ][μ][ν] = G^σ_{μν} = ∂̇_ν N^σ_μ
  Ten3 landsberg{};         // L = Berwald − Chern
  Ten3 cartan_vertical{};   // Λ^σ_{μν} = g^{σρ} C_{ρμν}
};

Connections connections(const MetricField& f, const Vec4& x, const Vec4& y,
                        const FinslerOptions& opt = {});

struct CurvatureReport {
  bool exact_zero = false;
  Ten3 torsion{};       // R[σ][μ][ν] = R^σ_{μν} = δ_ν N^σ_μ − δ_μ N^σ_ν
  Ten4 finsler{};       // F[ρ][σ][μ][ν] = ∂̇_σ R^ρ_{μν}
  Mat4 flag{};          // F[ν][μ] = y^α R^ν_{μα}
  Ten4 berwald_curv{};  // B[σ][ρ][μ][ν] = ∂̇_ρ G^σ_{μν}
  Ten4 rtilde{};        // R̃^σ_{ρμν}
  Ten4 s_curv{}, p_curv{}, x_curv{};  // Cartan-connection triple blocks
};

CurvatureReport torsion_and_curvature(const MetricField& f, const Vec4& x,
                                      const Vec4& y,
                                      const FinslerOptions& opt = {});

struct GeometryReport {
  Vec4 x{}, y{};
  Mat4 g{}, g_inverse{};
  Ten3 cartan{};
  double cartan_scalar = 0.0;
  Connections conn;
  CurvatureReport curv;
  double g_symmetry_residual = 0.0;   // max |g − gᵀ| before symmetrizing
  double g_inverse_residual = 0.0;    // max |g·g⁻¹ − 1|
  double gyy_residual = 0.0;          // |g·yy − F²| / |F²|
  double homogeneity_residual = 0.0;  // λ ∈ {1/2, 2, 5}
};

GeometryReport geometry_report(const MetricField& f, const Vec4& x,
                               const Vec4& y, const FinslerOptions& opt = {});

nlohmann::ordered_json report_to_json(const GeometryReport& r);

}  // namespace vsr
