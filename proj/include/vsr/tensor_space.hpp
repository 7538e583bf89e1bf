#pragma once

#include <optional>
#include <vector>

#include "vsr/errors.hpp"
#include "vsr/exact_linalg.hpp"
#include "vsr/rational.hpp"

namespace vsr {

/// Constant covariant tensor of rank 1..4 over spacetime indices
/// μ ∈ {t,x,y,z} ↔ {0,1,2,3}. Components are flattened row-major with
/// the first index slowest.
struct TensorVector {
  int rank = 1;
  RatVec components;  // length 4^rank

  bool operator==(const TensorVector&) const = default;
};

std::size_t tensor_dim(int rank);  // 4^rank; throws RankOutOfRange

TensorVector tensor_from_components(int rank, RatVec components);

enum class SymmetryClass { symmetric, antisymmetric, mixed };

std::string symmetry_name(SymmetryClass s);

/// Matrix of the derivation (L·G)_{μ1…μp} = Σ_j φ^{α}{}_{μ_j} G_{…α…}
/// acting on the flattened 4^p tensor space.
RatMatrix induced_derivation_operator(const RatMatrix& phi, int rank);

/// Rank 2 or 3 only.
SymmetryClass classify_symmetry(const TensorVector& t);

/// Full cyclic symmetrization v_{(σ} g_{μν)} = v_σ g_{μν} + v_μ g_{νσ}
/// + v_ν g_{σμ} (no 1/3). The paper's printed rank-3 tensors equal this
/// product up to an overall constant, recovered by in_span_of_products.
TensorVector symmetrized_product(const TensorVector& v, const TensorVector& g);

/// Plain tensor product (ranks add; result rank must stay ≤ 4).
TensorVector tensor_product(const TensorVector& a, const TensorVector& b);

/// Exact coefficients of T over the symmetrized products {v_i ⊗_sym g_j}
/// (one coefficient per (i,j), row-major), or nullopt if not decomposable.
std::optional<RatVec> in_span_of_products(
    const TensorVector& t, const std::vector<TensorVector>& rank1s,
    const std::vector<TensorVector>& rank2s);

}  // namespace vsr
