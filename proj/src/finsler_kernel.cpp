#include "vsr/finsler_kernel.hpp"

#include <cmath>
#include <utility>

#include "vsr/errors.hpp"

namespace vsr {

namespace {

double norm(const Vec4& y) {
  return std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2] + y[3] * y[3]);
}

void check_base(const MetricField& f, const Vec4& x, const Vec4& y) {
  if (norm(y) == 0.0) throw DomainError("y must be nonzero");
  if (f.domain && !f.domain(x, y))
    throw DomainError("base point outside the declared domain");
}

double eval_f2(const MetricField& f, const Vec4& x, const Vec4& y) {
  if (f.domain && !f.domain(x, y))
    throw StepTooLarge("finite-difference stencil exits the domain");
  return f.evaluator(x, y);
}

using VecD = std::vector<double>;

// First derivative of a vector-valued function along one coordinate with
// one Richardson extrapolation level.
template <typename Fn>
VecD diff1(const Fn& fn, const Vec4& base, int mu, double step) {
  auto at = [&](double d) {
    Vec4 t = base;
    t[mu] += d;
    return fn(t);
  };
  auto central = [&](double s) {
    VecD plus = at(s), minus = at(-s);
    for (std::size_t i = 0; i < plus.size(); ++i)
      plus[i] = (plus[i] - minus[i]) / (2.0 * s);
    return plus;
  };
  VecD coarse = central(step), fine = central(step / 2.0);
  for (std::size_t i = 0; i < fine.size(); ++i)
    fine[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return fine;
}

VecD flatten(const Mat4& m) {
  VecD v(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v[a * 4 + b] = m[a][b];
  return v;
}

Mat4 to_mat(const VecD& v) {
  Mat4 m{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m[a][b] = v[a * 4 + b];
  return m;
}

VecD flatten(const Ten3& t) {
  VecD v(64);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) v[(a * 4 + b) * 4 + c] = t[a][b][c];
  return v;
}

Ten3 to_ten3(const VecD& v) {
  Ten3 t{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) t[a][b][c] = v[(a * 4 + b) * 4 + c];
  return t;
}

// ½∂̇∂̇F² with one Richardson level per second-difference stencil.
Mat4 g_raw(const MetricField& f, const Vec4& x, const Vec4& y, double h,
           double* asym_out = nullptr) {
  const double s0 = h * norm(y);
  auto f2 = [&](const Vec4& yy) { return eval_f2(f, x, yy); };
  auto second = [&](int mu, int nu, double s) {
    Vec4 a = y, b = y, c = y, d = y;
    if (mu == nu) {
      a[mu] += s;
      c[mu] -= s;
      return (f2(a) - 2.0 * f2(y) + f2(c)) / (s * s);
    }
    a[mu] += s; a[nu] += s;
    b[mu] += s; b[nu] -= s;
    c[mu] -= s; c[nu] += s;
    d[mu] -= s; d[nu] -= s;
    return (f2(a) - f2(b) - f2(c) + f2(d)) / (4.0 * s * s);
  };
  Mat4 g{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const double coarse = second(mu, nu, s0);
      const double fine = second(mu, nu, s0 / 2.0);
      g[mu][nu] = g[nu][mu] = 0.5 * (4.0 * fine - coarse) / 3.0;
    }
  if (asym_out) *asym_out = 0.0;  // symmetric stencil by construction
  return g;
}

struct Frame {
  Mat4 g, ginv;
};

Frame frame_at(const MetricField& f, const Vec4& x, const Vec4& y, double h,
               double tol) {
  Frame fr;
  fr.g = g_raw(f, x, y, h);
  fr.ginv = invert4(fr.g, tol);
  return fr;
}

// Formal Christoffel symbols γ^μ_{αβ} from x-derivatives of g.
Ten3 christoffel(const MetricField& f, const Vec4& x, const Vec4& y,
                 const FinslerOptions& opt, const Mat4& ginv) {
  Ten3 dg{};  // dg[μ][α][β] = ∂̂_μ g_{αβ}
  if (f.x_dependent) {
    for (int mu = 0; mu < 4; ++mu) {
      auto fn = [&](const Vec4& xx) { return flatten(g_raw(f, xx, y, opt.h)); };
      dg[mu] = to_mat(diff1(fn, x, mu, opt.hx));
    }
  }
  Ten3 gamma{};
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double sum = 0.0;
        for (int u = 0; u < 4; ++u)
          sum += ginv[mu][u] * (dg[a][b][u] + dg[b][a][u] - dg[u][a][b]);
        gamma[mu][a][b] = 0.5 * sum;
      }
  return gamma;
}

Vec4 spray_at(const MetricField& f, const Vec4& x, const Vec4& y,
              const FinslerOptions& opt) {
  const Frame fr = frame_at(f, x, y, opt.h, opt.singular_tol);
  const Ten3 gamma = christoffel(f, x, y, opt, fr.ginv);
  Vec4 g_spray{};
  for (int mu = 0; mu < 4; ++mu) {
    double sum = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) sum += gamma[mu][a][b] * y[a] * y[b];
    g_spray[mu] = 0.5 * sum;
  }
  return g_spray;
}

Mat4 nonlinear_at(const MetricField& f, const Vec4& x, const Vec4& y,
                  const FinslerOptions& opt) {
  // N^ν_μ = ∂̇_μ G^ν, stored as N[ν][μ].
  Mat4 n{};
  for (int mu = 0; mu < 4; ++mu) {
    auto fn = [&](const Vec4& yy) {
      Vec4 s = spray_at(f, x, yy, opt);
      return VecD(s.begin(), s.end());
    };
    const VecD d = diff1(fn, y, mu, opt.h * norm(y));
    for (int nu = 0; nu < 4; ++nu) n[nu][mu] = d[nu];
  }
  return n;
}

// δ_μ T = ∂̂_μ T − N^α_μ ∂̇_α T for a flattened tensor-valued function.
template <typename Fn>
std::array<VecD, 4> delta_of(const Fn& fn, const Vec4& x, const Vec4& y,
                             const Mat4& n, const FinslerOptions& opt,
                             bool x_dependent) {
  const double sy = opt.h * norm(y);
  std::array<VecD, 4> dx{}, dy{};
  for (int mu = 0; mu < 4; ++mu) {
    auto in_y = [&](const Vec4& yy) { return fn(x, yy); };
    dy[mu] = diff1(in_y, y, mu, sy);
    if (x_dependent) {
      auto in_x = [&](const Vec4& xx) { return fn(xx, y); };
      dx[mu] = diff1(in_x, x, mu, opt.hx);
    } else {
      dx[mu] = VecD(dy[mu].size(), 0.0);
    }
  }
  std::array<VecD, 4> out{};
  for (int mu = 0; mu < 4; ++mu) {
    out[mu] = dx[mu];
    for (int a = 0; a < 4; ++a)
      for (std::size_t i = 0; i < out[mu].size(); ++i)
        out[mu][i] -= n[a][mu] * dy[a][i];
  }
  return out;
}

Ten3 chern_at(const MetricField& f, const Vec4& x, const Vec4& y,
              const Mat4& n, const Mat4& ginv, const FinslerOptions& opt) {
  auto g_fn = [&](const Vec4& xx, const Vec4& yy) {
    return flatten(g_raw(f, xx, yy, opt.h));
  };
  const auto dg = delta_of(g_fn, x, y, n, opt, f.x_dependent);
  Ten3 dgm{};  // dgm[μ][α][β] = δ_μ g_{αβ}
  for (int mu = 0; mu < 4; ++mu) dgm[mu] = to_mat(dg[mu]);
  Ten3 chern{};
  for (int s = 0; s < 4; ++s)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double sum = 0.0;
        for (int r = 0; r < 4; ++r)
          sum += ginv[s][r] * (dgm[mu][r][nu] + dgm[nu][r][mu] -
                               dgm[r][mu][nu]);
        chern[s][mu][nu] = 0.5 * sum;
      }
  return chern;
}

Ten3 symmetrize3(const Ten3& c) {
  Ten3 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int s = 0; s < 4; ++s)
        out[a][b][s] = (c[a][b][s] + c[b][s][a] + c[s][a][b] + c[a][s][b] +
                        c[b][a][s] + c[s][b][a]) / 6.0;
  return out;
}

}  // namespace

MetricField field_from_metric(MetricSpec spec, ScalarFn s) {
  MetricField f;
  f.x_dependent = false;
  f.evaluator = [spec = std::move(spec), s = std::move(s)](
                    const Vec4&, const Vec4& y) {
    return evaluate(spec, y, s);
  };
  return f;
}

MetricField sphere_test_field() {
  MetricField f;
  f.x_dependent = true;
  f.evaluator = [](const Vec4& x, const Vec4& y) {
    const double st = std::sin(x[1]);
    return y[0] * y[0] + y[1] * y[1] + st * st * y[2] * y[2] + y[3] * y[3];
  };
  return f;
}

Mat4 fundamental_tensor(const MetricField& f, const Vec4& x, const Vec4& y,
                        double h) {
  check_base(f, x, y);
  return g_raw(f, x, y, h);
}

Mat4 invert4(const Mat4& g, double tol) {
  double scale = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) scale = std::max(scale, std::abs(g[a][b]));
  if (scale == 0.0) throw SingularMetric("fundamental tensor is zero");
  // Gauss-Jordan with partial pivoting on [g | I].
  double aug[4][8];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      aug[a][b] = g[a][b];
      aug[a][4 + b] = (a == b) ? 1.0 : 0.0;
    }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    if (std::abs(aug[piv][col]) <= tol * scale)
      throw SingularMetric("fundamental tensor not invertible within tolerance");
    if (piv != col)
      for (int c = 0; c < 8; ++c) std::swap(aug[piv][c], aug[col][c]);
    const double inv = 1.0 / aug[col][col];
    for (int c = 0; c < 8; ++c) aug[col][c] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double m = aug[r][col];
      if (m == 0.0) continue;
      for (int c = 0; c < 8; ++c) aug[r][c] -= m * aug[col][c];
    }
  }
  Mat4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out[a][b] = aug[a][4 + b];
  return out;
}

double homogeneity_check(const MetricField& f, const Vec4& x, const Vec4& y,
                         const std::vector<double>& lambda_samples) {
  check_base(f, x, y);
  const double base = eval_f2(f, x, y);
  double worst = 0.0;
  for (double lam : lambda_samples) {
    Vec4 ly{};
    for (int i = 0; i < 4; ++i) ly[i] = lam * y[i];
    const double expected = lam * lam * base;
    const double got = eval_f2(f, x, ly);
    const double denom = std::abs(expected) > 1e-300 ? std::abs(expected) : 1.0;
    worst = std::max(worst, std::abs(got - expected) / denom);
  }
  return worst;
}

Ten3 cartan_tensor(const MetricField& f, const Vec4& x, const Vec4& y,
                   double h) {
  check_base(f, x, y);
  const double s = h * norm(y);
  Ten3 c{};
  for (int sig = 0; sig < 4; ++sig) {
    auto fn = [&](const Vec4& yy) { return flatten(g_raw(f, x, yy, h)); };
    const Mat4 dg = to_mat(diff1(fn, y, sig, s));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) c[a][b][sig] = 0.5 * dg[a][b];
  }
  return symmetrize3(c);
}

double cartan_scalar(const MetricField& f, const Vec4& x, const Vec4& y,
                     double h, double singular_tol) {
  const Ten3 c = cartan_tensor(f, x, y, h);
  const Mat4 ginv = invert4(g_raw(f, x, y, h), singular_tol);
  Vec4 cm{};
  for (int mu = 0; mu < 4; ++mu) {
    double sum = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) sum += c[mu][a][b] * ginv[a][b];
    cm[mu] = sum;
  }
  double out = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) out += ginv[mu][nu] * cm[mu] * cm[nu];
  return out;
}

Connections connections(const MetricField& f, const Vec4& x, const Vec4& y,
                        const FinslerOptions& opt) {
  check_base(f, x, y);
  Connections out;
  const Frame fr = frame_at(f, x, y, opt.h, opt.singular_tol);
  const Ten3 cart = cartan_tensor(f, x, y, opt.h);
  for (int s = 0; s < 4; ++s)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double sum = 0.0;
        for (int r = 0; r < 4; ++r) sum += fr.ginv[s][r] * cart[r][mu][nu];
        out.cartan_vertical[s][mu][nu] = sum;
      }
  if (!f.x_dependent && !opt.force_generic) {
    // Finsler-Minkowski: γ = 0, hence spray, N and every horizontal
    // connection vanish identically.
    out.exact_zero = true;
    return out;
  }
  out.spray = spray_at(f, x, y, opt);
  out.nonlinear = nonlinear_at(f, x, y, opt);
  {
    const double s = opt.h * norm(y);
    for (int nu = 0; nu < 4; ++nu) {
      auto fn = [&](const Vec4& yy) {
        return flatten(nonlinear_at(f, x, yy, opt));
      };
      const Mat4 dn = to_mat(diff1(fn, y, nu, s));
      for (int sig = 0; sig < 4; ++sig)
        for (int mu = 0; mu < 4; ++mu) out.berwald[sig][mu][nu] = dn[sig][mu];
    }
  }
  out.chern = chern_at(f, x, y, out.nonlinear, fr.ginv, opt);
  for (int s = 0; s < 4; ++s)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        out.landsberg[s][mu][nu] = out.berwald[s][mu][nu] - out.chern[s][mu][nu];
  return out;
}

CurvatureReport torsion_and_curvature(const MetricField& f, const Vec4& x,
                                      const Vec4& y,
                                      const FinslerOptions& opt) {
  check_base(f, x, y);
  CurvatureReport out;
  if (!f.x_dependent && !opt.force_generic) {
    out.exact_zero = true;
    return out;
  }
  const Mat4 n = nonlinear_at(f, x, y, opt);
  auto torsion_at = [&](const Vec4& xx, const Vec4& yy) -> Ten3 {
    const Mat4 nn = nonlinear_at(f, xx, yy, opt);
    auto n_fn = [&](const Vec4& x2, const Vec4& y2) {
      return flatten(nonlinear_at(f, x2, y2, opt));
    };
    const auto dn = delta_of(n_fn, xx, yy, nn, opt, f.x_dependent);
    Ten3 r{};
    for (int sig = 0; sig < 4; ++sig)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
          r[sig][mu][nu] = dn[nu][sig * 4 + mu] - dn[mu][sig * 4 + nu];
    return r;
  };
  out.torsion = torsion_at(x, y);
  for (int nu = 0; nu < 4; ++nu)
    for (int mu = 0; mu < 4; ++mu) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a) sum += y[a] * out.torsion[nu][mu][a];
      out.flag[nu][mu] = sum;
    }
  {  // Finsler curvature F^ρ_{σμν} = ∂̇_σ R^ρ_{μν}
    const double s = opt.h * norm(y);
    for (int sig = 0; sig < 4; ++sig) {
      auto fn = [&](const Vec4& yy) { return flatten(torsion_at(x, yy)); };
      const Ten3 dt = to_ten3(diff1(fn, y, sig, s));
      for (int rho = 0; rho < 4; ++rho)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu)
            out.finsler[rho][sig][mu][nu] = dt[rho][mu][nu];
    }
  }
  auto berwald_at = [&](const Vec4& xx, const Vec4& yy) -> Ten3 {
    const double s = opt.h * norm(yy);
    Ten3 b{};
    for (int nu = 0; nu < 4; ++nu) {
      auto fn = [&](const Vec4& y2) {
        return flatten(nonlinear_at(f, xx, y2, opt));
      };
      const Mat4 dn = to_mat(diff1(fn, yy, nu, s));
      for (int sig = 0; sig < 4; ++sig)
        for (int mu = 0; mu < 4; ++mu) b[sig][mu][nu] = dn[sig][mu];
    }
    return b;
  };
  const Ten3 berw = berwald_at(x, y);
  {  // B^σ_{ρμν} = ∂̇_ρ G^σ_{μν}
    const double s = opt.h * norm(y);
    for (int rho = 0; rho < 4; ++rho) {
      auto fn = [&](const Vec4& yy) { return flatten(berwald_at(x, yy)); };
      const Ten3 db = to_ten3(diff1(fn, y, rho, s));
      for (int sig = 0; sig < 4; ++sig)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu)
            out.berwald_curv[sig][rho][mu][nu] = db[sig][mu][nu];
    }
  }
  auto b_fn = [&](const Vec4& xx, const Vec4& yy) {
    return flatten(berwald_at(xx, yy));
  };
  const auto dberw = delta_of(b_fn, x, y, n, opt, f.x_dependent);
  auto at3 = [](const VecD& v, int a, int b, int c) {
    return v[(a * 4 + b) * 4 + c];
  };
  for (int sig = 0; sig < 4; ++sig)
    for (int rho = 0; rho < 4; ++rho)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double val = at3(dberw[mu], sig, rho, nu) -
                       at3(dberw[nu], sig, rho, mu);
          for (int gam = 0; gam < 4; ++gam)
            val += berw[gam][rho][nu] * berw[sig][gam][mu] -
                   berw[gam][rho][mu] * berw[sig][gam][nu];
          out.rtilde[sig][rho][mu][nu] = val;
        }
  // Cartan-connection triple (N, Γ, Λ): S (horizontal), P (vertical),
  // X (mixed) curvature blocks.
  const Frame fr = frame_at(f, x, y, opt.h, opt.singular_tol);
  auto chern_fn = [&](const Vec4& xx, const Vec4& yy) {
    const Mat4 nn = nonlinear_at(f, xx, yy, opt);
    const Mat4 gi = invert4(g_raw(f, xx, yy, opt.h), opt.singular_tol);
    return flatten(chern_at(f, xx, yy, nn, gi, opt));
  };
  auto lambda_fn = [&](const Vec4& xx, const Vec4& yy) {
    const Ten3 cart = cartan_tensor(f, xx, yy, opt.h);
    const Mat4 gi = invert4(g_raw(f, xx, yy, opt.h), opt.singular_tol);
    Ten3 lam{};
    for (int sig = 0; sig < 4; ++sig)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double sum = 0.0;
          for (int r = 0; r < 4; ++r) sum += gi[sig][r] * cart[r][mu][nu];
          lam[sig][mu][nu] = sum;
        }
    return flatten(lam);
  };
  const Ten3 chern = chern_at(f, x, y, n, fr.ginv, opt);
  const Ten3 lam = to_ten3(lambda_fn(x, y));
  const auto dchern = delta_of(chern_fn, x, y, n, opt, f.x_dependent);
  const double sy = opt.h * norm(y);
  std::array<VecD, 4> ddot_chern{}, ddot_lam{};
  std::array<VecD, 4> ddelta_lam{};
  {
    const auto dlam = delta_of(lambda_fn, x, y, n, opt, f.x_dependent);
    ddelta_lam = dlam;
  }
  for (int mu = 0; mu < 4; ++mu) {
    auto ch_y = [&](const Vec4& yy) { return chern_fn(x, yy); };
    auto lm_y = [&](const Vec4& yy) { return lambda_fn(x, yy); };
    ddot_chern[mu] = diff1(ch_y, y, mu, sy);
    ddot_lam[mu] = diff1(lm_y, y, mu, sy);
  }
  for (int mu = 0; mu < 4; ++mu)
    for (int sig = 0; sig < 4; ++sig)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double sv = at3(dchern[b], mu, sig, a) - at3(dchern[a], mu, sig, b);
          double pv = at3(ddot_lam[b], mu, sig, a) -
                      at3(ddot_lam[a], mu, sig, b);
          double xv = at3(ddot_chern[b], mu, sig, a) -
                      at3(ddelta_lam[a], mu, sig, b);
          for (int r = 0; r < 4; ++r) {
            sv += chern[mu][r][b] * chern[r][sig][a] -
                  chern[mu][r][a] * chern[r][sig][b];
            pv += lam[mu][r][b] * lam[r][sig][a] -
                  lam[mu][r][a] * lam[r][sig][b];
            xv += lam[mu][r][b] * chern[r][sig][a] -
                  chern[mu][r][b] * lam[r][sig][a];
          }
          out.s_curv[mu][sig][a][b] = sv;
          out.p_curv[mu][sig][a][b] = pv;
          out.x_curv[mu][sig][a][b] = xv;
        }
  return out;
}

GeometryReport geometry_report(const MetricField& f, const Vec4& x,
                               const Vec4& y, const FinslerOptions& opt) {
  GeometryReport r;
  r.x = x;
  r.y = y;
  r.g = fundamental_tensor(f, x, y, opt.h);
  r.g_inverse = invert4(r.g, opt.singular_tol);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double id = 0.0;
      for (int c = 0; c < 4; ++c) id += r.g[a][c] * r.g_inverse[c][b];
      r.g_inverse_residual =
          std::max(r.g_inverse_residual, std::abs(id - (a == b ? 1.0 : 0.0)));
      r.g_symmetry_residual =
          std::max(r.g_symmetry_residual, std::abs(r.g[a][b] - r.g[b][a]));
    }
  r.cartan = cartan_tensor(f, x, y, opt.h);
  r.cartan_scalar = cartan_scalar(f, x, y, opt.h, opt.singular_tol);
  r.conn = connections(f, x, y, opt);
  r.curv = torsion_and_curvature(f, x, y, opt);
  const double f2 = eval_f2(f, x, y);
  double gyy = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) gyy += r.g[a][b] * y[a] * y[b];
  r.gyy_residual = std::abs(gyy - f2) / std::max(std::abs(f2), 1e-300);
  r.homogeneity_residual = homogeneity_check(f, x, y, {0.5, 2.0, 5.0});
  return r;
}

nlohmann::ordered_json report_to_json(const GeometryReport& r) {
  nlohmann::ordered_json j;
  j["x"] = r.x;
  j["y"] = r.y;
  auto mat = [](const Mat4& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
  };
  j["g"] = mat(r.g);
  j["g_inverse"] = mat(r.g_inverse);
  j["cartan_scalar"] = r.cartan_scalar;
  j["connections_exact_zero"] = r.conn.exact_zero;
  j["curvature_exact_zero"] = r.curv.exact_zero;
  j["residuals"] = {{"g_symmetry", r.g_symmetry_residual},
                    {"g_inverse", r.g_inverse_residual},
                    {"gyy_vs_F2", r.gyy_residual},
                    {"homogeneity", r.homogeneity_residual}};
  return j;
}

}  // namespace vsr
