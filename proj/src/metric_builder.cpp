#include "vsr/metric_builder.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "vsr/errors.hpp"

namespace vsr {

namespace {

TensorVector member_tensor(const CovariantFamily& fam, const RatVec& coeffs) {
  if (coeffs.size() != fam.basis.vectors.size())
    throw std::invalid_argument("family choice coefficient count mismatch");
  RatVec comp(fam.basis.ambient_dim, Rat(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (std::size_t i = 0; i < comp.size(); ++i)
      comp[i] += coeffs[k] * fam.basis.vectors[k][i];
  return tensor_from_components(fam.rank, comp);
}

// A monomial vanishes identically iff the full symmetrization of its
// tensor is zero; for the ranks in play it is enough to test M(y) on a
// small spanning set of rational y.
bool contracts_to_zero(const TensorVector& t) {
  static const std::vector<RatVec> probes = {
      {Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(0)},
      {Rat(0), Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(0), Rat(1)},
      {Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(1), Rat(0)},
      {Rat(1), Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1), Rat(0)},
      {Rat(0), Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(1), Rat(1)},
      {Rat(1), Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(0), Rat(1)},
      {Rat(1), Rat(0), Rat(1), Rat(1)}, {Rat(0), Rat(1), Rat(1), Rat(1)},
      {Rat(1), Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(2), Rat(3), Rat(4)},
      {Rat(4), Rat(3), Rat(2), Rat(1)}, {Rat(1), Rat(-1), Rat(2), Rat(-3)},
      {Rat(2), Rat(1), Rat(-1), Rat(3)}, {Rat(3), Rat(-2), Rat(1), Rat(1)}};
  for (const auto& y : probes)
    if (contract(t, y) != 0) return false;
  return true;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(
    const std::vector<CovariantFamily>& families,
    const std::vector<FamilyChoice>& choices) {
  std::vector<Monomial> out;
  for (const auto& ch : choices) {
    if (ch.family_index >= families.size())
      throw std::invalid_argument("family index out of range");
    const auto& fam = families[ch.family_index];
    Monomial m;
    m.tensor = member_tensor(fam, ch.coefficients);
    if (contracts_to_zero(m.tensor)) continue;  // antisymmetric member
    m.weights = fam.weights;
    if (!ch.label.empty()) {
      m.name = ch.label;
    } else {
      std::ostringstream os;
      os << "M" << out.size() << "[rank" << fam.rank << "]";
      m.name = os.str();
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<FamilyChoice> default_choices(
    const std::vector<CovariantFamily>& families) {
  std::vector<FamilyChoice> choices;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& fam = families[i];
    if (fam.derived_from_rank1) continue;
    if (fam.basis.dim() != 1) continue;
    FamilyChoice ch;
    ch.family_index = i;
    ch.coefficients = {Rat(1)};
    choices.push_back(std::move(ch));
  }
  return choices;
}

std::vector<Monomial> default_monomials(const GroupInstance& g,
                                        const std::vector<int>& ranks) {
  std::vector<Monomial> out;
  for (int rank : ranks) {
    auto fams = conformal_covariants(g, rank);
    std::vector<FamilyChoice> choices;
    for (std::size_t i = 0; i < fams.size(); ++i) {
      if (fams[i].derived_from_rank1) continue;
      for (std::size_t k = 0; k < fams[i].basis.dim(); ++k) {
        FamilyChoice ch;
        ch.family_index = i;
        ch.coefficients = RatVec(fams[i].basis.dim(), Rat(0));
        ch.coefficients[k] = Rat(1);
        std::ostringstream os;
        os << "M" << out.size() + choices.size() << "[rank" << rank << "]";
        ch.label = os.str();
        choices.push_back(std::move(ch));
      }
    }
    auto ms = enumerate_monomials(fams, choices);
    out.insert(out.end(), ms.begin(), ms.end());
  }
  return out;
}

ExponentSolution solve_exponents(const std::vector<Monomial>& monomials,
                                 const Rat& target_degree) {
  ExponentSolution out;
  if (monomials.empty()) return out;
  const std::size_t n = monomials.size();
  // Collect the union of parameter symbols appearing in any weight map.
  std::map<std::string, std::size_t> symrow;
  for (const auto& m : monomials)
    for (const auto& [sym, w] : m.weights)
      if (w != 0) symrow.emplace(sym, 0);
  std::size_t r = 0;
  for (auto& [sym, row] : symrow) row = 1 + r++;
  RatMatrix a(1 + symrow.size(), n);
  RatVec b(1 + symrow.size(), Rat(0));
  b[0] = target_degree;
  for (std::size_t i = 0; i < n; ++i) {
    a(0, i) = Rat(monomials[i].degree());
    for (const auto& [sym, w] : monomials[i].weights)
      if (w != 0) a(symrow.at(sym), i) = w;
  }
  auto sol = solve_affine(a, b);
  out.feasible = sol.feasible;
  if (sol.feasible) {
    out.particular = sol.particular;
    out.kernel = sol.kernel;
  } else {
    out.kernel = SubspaceBasis{n, {}};
  }
  return out;
}

std::vector<RatVec> zero_degree_invariants(
    const std::vector<Monomial>& monomials) {
  auto sol = solve_exponents(monomials, Rat(0));
  // target 0 is always feasible (E = 0); the interesting directions are
  // the kernel vectors.
  return sol.kernel.vectors;
}

std::string ratio_string(const std::vector<Monomial>& monomials,
                         const RatVec& exponents) {
  std::ostringstream num, den;
  bool have_num = false, have_den = false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    const Rat e = exponents[i] > 0 ? exponents[i] : Rat(-exponents[i]);
    std::ostringstream& os = exponents[i] > 0 ? num : den;
    bool& have = exponents[i] > 0 ? have_num : have_den;
    if (have) os << "*";
    os << "(" << monomials[i].name << ")";
    if (e != 1) os << "^" << rat_str(e);
    have = true;
  }
  if (!have_num) num << "1";
  if (!have_den) return num.str();
  return num.str() + " / " + den.str();
}

MetricSpec assemble_metric(const std::vector<Monomial>& monomials,
                           const ExponentSolution& sol,
                           const RatVec& kernel_choice, MetricForm form,
                           std::optional<MetricSpec::Modifier> modifier) {
  if (!sol.feasible)
    throw InfeasibleSolution("exponent constraints have no solution");
  if (!kernel_choice.empty() && kernel_choice.size() != sol.kernel.dim())
    throw std::invalid_argument("kernel choice dimension mismatch");
  RatVec e = sol.particular;
  for (std::size_t j = 0; j < kernel_choice.size(); ++j)
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] += kernel_choice[j] * sol.kernel.vectors[j][i];
  Rat degree(0);
  MetricSpec spec;
  spec.form = form;
  spec.modifier = std::move(modifier);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    degree += Rat(monomials[i].degree()) * e[i];
    if (e[i] == 0) continue;
    spec.factors.push_back({monomials[i], e[i]});
  }
  if (degree != 2)
    throw InfeasibleSolution("assembled metric is not homogeneous of degree 2");
  return spec;
}

Rat contract(const TensorVector& t, const RatVec& y) {
  if (y.size() != 4) throw std::invalid_argument("y must have 4 components");
  Rat total(0);
  const std::size_t dim = t.components.size();
  for (std::size_t flat = 0; flat < dim; ++flat) {
    if (t.components[flat] == 0) continue;
    Rat term = t.components[flat];
    std::size_t f = flat;
    for (int j = 0; j < t.rank; ++j) {
      term *= y[(f >> (2 * (t.rank - 1 - j))) & 3];
    }
    total += term;
  }
  return total;
}

double contract(const TensorVector& t, const std::array<double, 4>& y) {
  double total = 0.0;
  const std::size_t dim = t.components.size();
  for (std::size_t flat = 0; flat < dim; ++flat) {
    if (t.components[flat] == 0) continue;
    double term = rat_double(t.components[flat]);
    std::size_t f = flat;
    for (int j = 0; j < t.rank; ++j)
      term *= y[(f >> (2 * (t.rank - 1 - j))) & 3];
    total += term;
  }
  return total;
}

namespace {

bool is_integer(const Rat& q) { return q.get_den() == 1; }

double powered(double base, const Rat& e, MetricForm form, double& sign_acc,
               int degree) {
  const double ed = rat_double(e);
  switch (form) {
    case MetricForm::plain:
      if (base == 0.0 && e < 0)
        throw DomainError("zero base with negative exponent");
      if (base < 0.0) {
        if (!is_integer(e))
          throw DomainError("negative base under fractional power");
        double v = std::pow(-base, ed);
        return (e.get_num() % 2 != 0) ? -v : v;
      }
      return std::pow(base, ed);
    case MetricForm::abs:
      if (base == 0.0 && e < 0)
        throw DomainError("zero base with negative exponent");
      return std::pow(std::abs(base), ed);
    case MetricForm::signed_abs:
      if (base == 0.0 && e < 0)
        throw DomainError("zero base with negative exponent");
      // even-degree (rank >= 2) monomials carry the sign of the metric;
      // odd-degree ones enter through their absolute value.
      if (degree % 2 == 0 && base < 0.0) sign_acc = -sign_acc;
      return std::pow(std::abs(base), ed);
  }
  throw std::logic_error("unhandled metric form");
}

double evaluate_product(const std::vector<MetricSpec::Factor>& factors,
                        const std::array<double, 4>& y, MetricForm form) {
  double sign = 1.0;
  double value = 1.0;
  for (const auto& f : factors) {
    const double base = contract(f.monomial.tensor, y);
    value *= powered(base, f.exponent, form, sign, f.monomial.degree());
  }
  return sign * value;
}

}  // namespace

double evaluate(const MetricSpec& spec, const std::array<double, 4>& y,
                const ScalarFn& s) {
  double f2;
  if (!spec.parts.empty()) {
    double f = 0.0;
    for (const auto& part : spec.parts)
      f += part.coefficient * evaluate_product(part.factors, y, spec.form);
    f2 = f * f;
  } else {
    f2 = evaluate_product(spec.factors, y, spec.form);
  }
  if (spec.modifier) {
    const auto& mod = *spec.modifier;
    double phi = 1.0;
    for (std::size_t i = 0; i < mod.exponents.size(); ++i) {
      if (mod.exponents[i] == 0) continue;
      const double base = contract(mod.monomials[i].tensor, y);
      if (base == 0.0 && mod.exponents[i] < 0)
        throw DomainError("modifier denominator vanishes");
      if (base < 0.0 && !is_integer(mod.exponents[i]))
        throw DomainError("modifier base negative under fractional power");
      phi *= std::pow(base, rat_double(mod.exponents[i]));
    }
    f2 *= s ? s(phi) : 1.0;
  }
  return f2;
}

nlohmann::ordered_json metric_to_json(const MetricSpec& spec,
                                      const ExponentSolution& sol) {
  nlohmann::ordered_json j;
  j["group"] = spec.group;
  j["feasible"] = sol.feasible;
  switch (spec.form) {
    case MetricForm::plain: j["form"] = "plain"; break;
    case MetricForm::abs: j["form"] = "abs"; break;
    case MetricForm::signed_abs: j["form"] = "signed-abs"; break;
  }
  j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : spec.factors) {
    nlohmann::ordered_json jf;
    jf["tensor_ref"] = f.monomial.name;
    jf["exponent"] = rat_str(f.exponent);
    j["factors"].push_back(jf);
  }
  j["modifier_tag"] = spec.modifier ? spec.modifier->tag : "";
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& p : spec.parts) {
    nlohmann::ordered_json jp;
    jp["coefficient"] = p.coefficient;
    jp["factors"] = nlohmann::ordered_json::array();
    for (const auto& f : p.factors) {
      nlohmann::ordered_json jf;
      jf["tensor_ref"] = f.monomial.name;
      jf["exponent"] = rat_str(f.exponent);
      jp["factors"].push_back(jf);
    }
    j["parts"].push_back(jp);
  }
  j["kernel_dim"] = sol.kernel.dim();
  return j;
}

}  // namespace vsr
