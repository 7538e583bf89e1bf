#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vsr/invariant_solver.hpp"
#include "vsr/tensor_space.hpp"

namespace vsr {

/// Scalar building block M_i(y) = G_{μ1…μp}·y^{μ1}…y^{μp} from a fixed
/// member of a covariant family.
struct Monomial {
  std::string name;  // display label, e.g. "N.y" or "G(-1,1).yy"
  TensorVector tensor;
  std::map<std::string, Rat> weights;  // inherited from the family

  int degree() const { return tensor.rank; }
};

/// Picks one member of a (possibly multi-parameter) family: the linear
/// combination Σ coefficients[k] · basis[k].
struct FamilyChoice {
  std::size_t family_index = 0;
  RatVec coefficients;
  std::string label;
};

/// One monomial per chosen member. Antisymmetric choices (which contract
/// to zero with y⊗y) and families flagged derived_from_rank1 are skipped
/// when choices default to the family bases.
std::vector<Monomial> enumerate_monomials(
    const std::vector<CovariantFamily>& families,
    const std::vector<FamilyChoice>& choices);

/// Default choices: every 1-dimensional family contributes its basis
/// vector (derived_from_rank1 and antisymmetric members skipped);
/// multi-parameter families are skipped and need explicit choices.
std::vector<FamilyChoice> default_choices(
    const std::vector<CovariantFamily>& families);

/// The standard monomial list for a group: every basis member of every
/// non-derived covariant family at the requested ranks, rank-1 families
/// first. Antisymmetric members drop out. Since feasibility of the
/// exponent system depends only on family weights, this list decides
/// metric existence for the group.
std::vector<Monomial> default_monomials(const GroupInstance& g,
                                        const std::vector<int>& ranks = {1,
                                                                         2});

struct ExponentSolution {
  bool feasible = false;
  RatVec particular;     // Σ p_i·E_i = target, Σ E_i·w_ia = 0 exactly
  SubspaceBasis kernel;  // zero-degree, zero-weight directions
};

/// Exact affine solve of the degree + scale-cancellation constraints.
ExponentSolution solve_exponents(const std::vector<Monomial>& monomials,
                                 const Rat& target_degree = Rat(2));

/// Basis of exponent vectors with Σ p_i·E_i = 0 and zero weights: the
/// zero-degree invariant modifiers φ.
std::vector<RatVec> zero_degree_invariants(
    const std::vector<Monomial>& monomials);

/// Renders an exponent vector as a ratio expression, e.g. "(N.y)^2 / (G.yy)".
std::string ratio_string(const std::vector<Monomial>& monomials,
                         const RatVec& exponents);

enum class MetricForm { plain, abs, signed_abs };

using ScalarFn = std::function<double(double)>;

struct MetricSpec {
  struct Factor {
    Monomial monomial;
    Rat exponent;
  };
  struct Modifier {
    RatVec exponents;  // zero-degree vector over the same monomial list
    std::vector<Monomial> monomials;
    std::string tag;  // symbolic tag of the arbitrary function S
  };
  struct Part {
    double coefficient = 1.0;
    std::vector<Factor> factors;  // Σ p_i·E_i = 1: a degree-1 F-part
  };

  std::string group;
  MetricForm form = MetricForm::signed_abs;
  std::vector<Factor> factors;       // F² = Π m_i^{E_i} when parts empty
  std::optional<Modifier> modifier;  // multiplies F² by S(φ)
  std::vector<Part> parts;           // F = Σ c_n·Π m^{E}; overrides factors
};

/// Builds the spec from a feasible solution; kernel_choice selects the
/// point particular + Σ kernel_choice[j]·kernel[j]. Homogeneity degree 2
/// is re-verified exactly. Throws InfeasibleSolution.
MetricSpec assemble_metric(const std::vector<Monomial>& monomials,
                           const ExponentSolution& sol,
                           const RatVec& kernel_choice = {},
                           MetricForm form = MetricForm::signed_abs,
                           std::optional<MetricSpec::Modifier> modifier = {});

/// Exact contraction M(y) for rational y; double overload for numerics.
Rat contract(const TensorVector& t, const RatVec& y);
double contract(const TensorVector& t, const std::array<double, 4>& y);

/// F²(y). Throws DomainError on nonpositive base under a fractional power
/// in plain form or a zero base with negative exponent.
double evaluate(const MetricSpec& spec, const std::array<double, 4>& y,
                const ScalarFn& s = {});

nlohmann::ordered_json metric_to_json(const MetricSpec& spec,
                                      const ExponentSolution& sol);

}  // namespace vsr
