#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vsr/group_catalog.hpp"
#include "vsr/tensor_space.hpp"

namespace vsr {

/// A maximal joint eigenspace of the induced derivation operators: every
/// basis tensor satisfies L_a·G = w_a·G exactly for every generator a.
struct CovariantFamily {
  int rank = 1;
  SubspaceBasis basis;                 // canonical basis over the 4^p space
  std::map<std::string, Rat> weights;  // generator symbol -> scale weight
  SymmetryClass symmetry = SymmetryClass::mixed;
  bool derived_from_rank1 = false;
};

struct SolverOptions {
  double tol = 1e-9;       // imaginary-part cut / eigenvalue dedup
  long max_den = 1000000;  // eigenvalue rationalization bound
};

/// Complete list of conformal-covariant families of the given rank.
/// Generators whose one-parameter subgroups act projectively on spacetime
/// (nonzero translation column together with a nonzero bottom row, i.e.
/// the de Sitter case) contribute the additional exact conditions that
/// the x-dependent part of the induced tangent action annihilates the
/// tensor; without them constant tensors are never covariant.
std::vector<CovariantFamily> conformal_covariants(
    const GroupInstance& g, int rank, const SolverOptions& opts = {});

struct VerifyReport {
  std::map<std::string, double> max_residual;  // per generator
  double overall = 0.0;
  bool pass = true;
};

/// Finite-transformation check: for each generator and sampled θ the
/// transformed basis tensors must equal e^{wθ}·tensor within tol relative.
VerifyReport verify_family(const GroupInstance& g, const CovariantFamily& f,
                           const std::vector<double>& theta_samples,
                           double tol = 1e-9);

nlohmann::ordered_json families_to_json(const GroupInstance& g, int rank,
                                        const std::vector<CovariantFamily>& fams);

}  // namespace vsr
