#include "vsr/invariant_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace vsr {
namespace {

struct Condition {
  RatMatrix op;     // derivation operator on the 4^p space
  bool pinned;      // weight forced to 0 (projective x-dependence condition)
  std::string symbol;  // generator that owns the weight (empty for pinned)
  std::size_t candidate_count = 1;
};

bool is_zero_vec(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

std::vector<double> to_doubles(const RatMatrix& m) {
  std::vector<double> d(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d[i * m.cols() + j] = rat_double(m(i, j));
  return d;
}

// Exact refinement: vectors v = B^T x in the current subspace with
// (A - λ) v = 0, returned as a canonical basis of the ambient space.
std::vector<RatVec> refine(const std::vector<RatVec>& basis, const RatMatrix& a,
                           const Rat& lambda) {
  const std::size_t dim = a.rows(), k = basis.size();
  RatMatrix c(dim, k);
  for (std::size_t j = 0; j < k; ++j) {
    RatVec av = a.apply(basis[j]);
    for (std::size_t i = 0; i < dim; ++i) c(i, j) = av[i] - lambda * basis[j][i];
  }
  SubspaceBasis coeff = null_space(c);
  std::vector<RatVec> out;
  for (const auto& x : coeff.vectors) {
    RatVec v(dim, Rat(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < dim; ++i) v[i] += x[j] * basis[j][i];
    out.push_back(std::move(v));
  }
  return span_of(dim, std::move(out)).vectors;
}

SymmetryClass family_symmetry(int rank, const std::vector<RatVec>& basis) {
  if (rank == 1) return SymmetryClass::symmetric;
  if (rank == 4) return SymmetryClass::mixed;
  bool any = false;
  SymmetryClass cls = SymmetryClass::mixed;
  for (const auto& v : basis) {
    SymmetryClass s = classify_symmetry(TensorVector{rank, v});
    if (!any) {
      cls = s;
      any = true;
    } else if (s != cls) {
      return SymmetryClass::mixed;
    }
  }
  return cls;
}

}  // namespace

std::vector<CovariantFamily> conformal_covariants(const GroupInstance& g,
                                                  int rank,
                                                  const SolverOptions& opts) {
  const std::size_t dim = tensor_dim(rank);

  std::vector<Condition> conditions;
  std::map<std::string, Rat> zero_weights;  // generators with zero linear part
  for (const auto& gen : g.generators) {
    const RatMatrix phi = linear_part(gen);
    const RatVec trans = translation_column(gen);
    const RatVec c = bottom_row(gen);
    if (!phi.is_zero()) {
      Condition cond;
      cond.op = induced_derivation_operator(phi, rank);
      cond.pinned = false;
      cond.symbol = gen.symbol;
      conditions.push_back(std::move(cond));
    } else {
      zero_weights[gen.symbol] = 0;
    }
    if (!is_zero_vec(trans) && !is_zero_vec(c)) {
      // x-linear part of the projective tangent action: the coefficient of
      // x^β is M_β = c_β·I + e_β ⊗ c, and constant covariance needs
      // L(M_β)·G = 0 for every β.
      for (int beta = 0; beta < 4; ++beta) {
        RatMatrix m(4, 4);
        for (int i = 0; i < 4; ++i) m(i, i) = c[beta];
        for (int nu = 0; nu < 4; ++nu) m(beta, nu) += c[nu];
        if (m.is_zero()) continue;
        Condition cond;
        cond.op = induced_derivation_operator(m, rank);
        cond.pinned = true;
        conditions.push_back(std::move(cond));
      }
    }
  }

  // Candidate eigenvalues per non-pinned condition (float solve, then
  // rationalization; exact verification happens during refinement).
  std::vector<std::vector<Rat>> candidates(conditions.size());
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (conditions[i].pinned) {
      candidates[i] = {Rat(0)};
      conditions[i].candidate_count = 1;
      continue;
    }
    auto evs = real_eigenvalues(to_doubles(conditions[i].op), dim, opts.tol);
    for (const auto& [value, mult] : evs) {
      Rat q = rationalize(value, opts.max_den);
      // Genuinely irrational eigenvalues do not occur for the catalog
      // groups at rational parameters; a huge denominator signals one.
      if (q.get_den() > 10000) continue;
      if (std::find(candidates[i].begin(), candidates[i].end(), q) ==
          candidates[i].end())
        candidates[i].push_back(q);
    }
    conditions[i].candidate_count = std::max<std::size_t>(candidates[i].size(), 1);
  }

  // Branch on the fewest candidates first (pinned conditions have one).
  std::vector<std::size_t> order(conditions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return conditions[a].candidate_count < conditions[b].candidate_count;
  });

  std::vector<RatVec> full(dim, RatVec(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) full[i][i] = 1;

  std::vector<CovariantFamily> out;
  std::function<void(std::size_t, std::vector<RatVec>,
                     std::map<std::string, Rat>)>
      walk = [&](std::size_t step, std::vector<RatVec> basis,
                 std::map<std::string, Rat> weights) {
        if (basis.empty()) return;
        if (step == order.size()) {
          CovariantFamily fam;
          fam.rank = rank;
          fam.basis.ambient_dim = dim;
          fam.basis.vectors = basis;
          fam.weights = std::move(weights);
          for (const auto& [sym, w] : zero_weights) fam.weights[sym] = w;
          fam.symmetry = family_symmetry(rank, basis);
          out.push_back(std::move(fam));
          return;
        }
        const Condition& cond = conditions[order[step]];
        for (const Rat& lambda : candidates[order[step]]) {
          std::vector<RatVec> refined = refine(basis, cond.op, lambda);
          if (refined.empty()) continue;
          auto w = weights;
          if (!cond.pinned) w[cond.symbol] = lambda;
          walk(step + 1, std::move(refined), std::move(w));
        }
      };
  walk(0, std::move(full), {});

  // Deterministic order: sort families by weight vector over sorted symbols.
  std::sort(out.begin(), out.end(),
            [](const CovariantFamily& a, const CovariantFamily& b) {
              if (a.weights != b.weights) return a.weights < b.weights;
              return a.basis.vectors < b.basis.vectors;
            });

  // Flag families fully contained in the span of products of rank-1
  // covariants with matching weight sums (e.g. N⊗N).
  if (rank >= 2) {
    const auto rank1 = conformal_covariants(g, 1, opts);
    for (auto& fam : out) {
      std::vector<RatVec> products;
      std::function<void(int, std::map<std::string, Rat>, TensorVector)>
          build = [&](int depth, std::map<std::string, Rat> sum,
                      TensorVector acc) {
            if (depth == rank) {
              if (sum == fam.weights) products.push_back(acc.components);
              return;
            }
            for (const auto& rf : rank1) {
              auto s = sum;
              for (const auto& [k, v] : rf.weights) s[k] += v;
              for (const auto& bv : rf.basis.vectors) {
                TensorVector v1{1, bv};
                build(depth + 1, s,
                      depth == 0 ? v1 : tensor_product(acc, v1));
              }
            }
          };
      build(0, std::map<std::string, Rat>{}, TensorVector{1, RatVec(4, Rat(0))});
      if (products.empty()) continue;
      SubspaceBasis span = span_of(dim, products);
      bool contained = !fam.basis.vectors.empty();
      for (const auto& v : fam.basis.vectors)
        if (!span.contains(v)) contained = false;
      fam.derived_from_rank1 = contained;
    }
  }
  return out;
}

VerifyReport verify_family(const GroupInstance& g, const CovariantFamily& f,
                           const std::vector<double>& theta_samples,
                           double tol) {
  VerifyReport rep;
  const std::size_t dim = tensor_dim(f.rank);
  for (const auto& gen : g.generators) {
    const RatMatrix phi = linear_part(gen);
    double worst = 0.0;
    const double w = rat_double(f.weights.at(gen.symbol));
    for (double theta : theta_samples) {
      std::vector<double> phid = to_doubles(phi);
      for (auto& x : phid) x *= theta;
      const std::vector<double> r = mat_exp(phid, 4);
      const double factor = std::exp(w * theta);
      for (const auto& bv : f.basis.vectors) {
        // T'_{μ...} = Σ_{α...} Π_j R(α_j, μ_j) T_{α...}
        std::vector<double> cur(dim);
        for (std::size_t i = 0; i < dim; ++i) cur[i] = rat_double(bv[i]);
        for (int j = 0; j < f.rank; ++j) {
          // contract index j with R
          std::vector<double> next(dim, 0.0);
          const std::size_t stride =
              std::size_t(1) << (2 * (f.rank - 1 - j));
          for (std::size_t flat = 0; flat < dim; ++flat) {
            const int mu = static_cast<int>((flat / stride) & 3);
            const std::size_t base = flat - std::size_t(mu) * stride;
            double acc = 0.0;
            for (int a = 0; a < 4; ++a)
              acc += r[a * 4 + mu] * cur[base + std::size_t(a) * stride];
            next[flat] = acc;
          }
          cur = std::move(next);
        }
        double scale = 0.0, resid = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
          const double want = factor * rat_double(bv[i]);
          scale = std::max(scale, std::abs(want));
          resid = std::max(resid, std::abs(cur[i] - want));
        }
        if (scale > 0) worst = std::max(worst, resid / scale);
      }
    }
    rep.max_residual[gen.symbol] = worst;
    rep.overall = std::max(rep.overall, worst);
  }
  rep.pass = rep.overall <= tol;
  return rep;
}

nlohmann::ordered_json families_to_json(
    const GroupInstance& g, int rank,
    const std::vector<CovariantFamily>& fams) {
  nlohmann::ordered_json j;
  j["group"] = group_name(g.id);
  j["rep_variant"] = g.rep_variant;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : g.params.assignments) params[k] = rat_str(v);
  j["params"] = params;
  j["rank"] = rank;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : fams) {
    nlohmann::ordered_json jf;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& v : f.basis.vectors) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& q : v) row.push_back(rat_str(q));
      basis.push_back(row);
    }
    jf["basis"] = basis;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.weights) w[k] = rat_str(v);
    jf["weights"] = w;
    jf["symmetry"] = symmetry_name(f.symmetry);
    jf["derived_from_rank1"] = f.derived_from_rank1;
    arr.push_back(jf);
  }
  j["families"] = arr;
  return j;
}

}  // namespace vsr
