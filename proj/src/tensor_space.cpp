#include "vsr/tensor_space.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace vsr {
namespace {

void decode(std::size_t flat, int rank, std::array<int, 4>& digits) {
  for (int j = rank - 1; j >= 0; --j) {
    digits[j] = static_cast<int>(flat & 3);
    flat >>= 2;
  }
}

std::size_t encode(const std::array<int, 4>& digits, int rank) {
  std::size_t flat = 0;
  for (int j = 0; j < rank; ++j) flat = (flat << 2) | digits[j];
  return flat;
}

Rat component_at(const TensorVector& t, const std::array<int, 4>& idx) {
  return t.components[encode(idx, t.rank)];
}

}  // namespace

std::size_t tensor_dim(int rank) {
  if (rank < 1 || rank > 4) throw RankOutOfRange("tensor rank must be 1..4");
  return std::size_t(1) << (2 * rank);
}

TensorVector tensor_from_components(int rank, RatVec components) {
  if (components.size() != tensor_dim(rank))
    throw std::invalid_argument("component count does not match rank");
  return TensorVector{rank, std::move(components)};
}

std::string symmetry_name(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::antisymmetric: return "antisymmetric";
    case SymmetryClass::mixed: return "mixed";
  }
  return "mixed";
}

RatMatrix induced_derivation_operator(const RatMatrix& phi, int rank) {
  const std::size_t dim = tensor_dim(rank);
  RatMatrix op(dim, dim);
  std::array<int, 4> idx{};
  for (std::size_t flat = 0; flat < dim; ++flat) {
    decode(flat, rank, idx);
    for (int j = 0; j < rank; ++j) {
      const int mu = idx[j];
      for (int a = 0; a < 4; ++a) {
        if (phi(a, mu) == 0) continue;
        std::array<int, 4> src = idx;
        src[j] = a;
        op(flat, encode(src, rank)) += phi(a, mu);
      }
    }
  }
  return op;
}

SymmetryClass classify_symmetry(const TensorVector& t) {
  if (t.rank != 2 && t.rank != 3)
    throw RankOutOfRange("symmetry classification needs rank 2 or 3");
  const std::size_t dim = tensor_dim(t.rank);
  bool symmetric = true, antisymmetric = true;
  std::array<int, 4> idx{};
  for (int swap = 0; swap + 1 < t.rank; ++swap) {
    for (std::size_t flat = 0; flat < dim; ++flat) {
      decode(flat, t.rank, idx);
      std::array<int, 4> swapped = idx;
      std::swap(swapped[swap], swapped[swap + 1]);
      const Rat& orig = t.components[flat];
      const Rat& mirr = t.components[encode(swapped, t.rank)];
      if (orig != mirr) symmetric = false;
      if (orig != -mirr) antisymmetric = false;
    }
  }
  if (symmetric) return SymmetryClass::symmetric;
  if (antisymmetric) return SymmetryClass::antisymmetric;
  return SymmetryClass::mixed;
}

TensorVector symmetrized_product(const TensorVector& v, const TensorVector& g) {
  if (v.rank != 1 || g.rank != 2)
    throw RankOutOfRange("symmetrized product takes rank 1 and rank 2");
  if (classify_symmetry(g) != SymmetryClass::symmetric &&
      !std::all_of(g.components.begin(), g.components.end(),
                   [](const Rat& q) { return q == 0; }))
    throw NotSymmetric("rank-2 factor must be symmetric");
  TensorVector out{3, RatVec(64, Rat(0))};
  std::array<int, 4> idx{};
  for (std::size_t flat = 0; flat < 64; ++flat) {
    decode(flat, 3, idx);
    const int s = idx[0], m = idx[1], n = idx[2];
    out.components[flat] = v.components[s] * g.components[m * 4 + n] +
                           v.components[m] * g.components[n * 4 + s] +
                           v.components[n] * g.components[s * 4 + m];
  }
  return out;
}

TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
  const int rank = a.rank + b.rank;
  TensorVector out{rank, RatVec(tensor_dim(rank), Rat(0))};
  const std::size_t bdim = tensor_dim(b.rank);
  for (std::size_t i = 0; i < a.components.size(); ++i)
    for (std::size_t j = 0; j < bdim; ++j)
      out.components[i * bdim + j] = a.components[i] * b.components[j];
  return out;
}

std::optional<RatVec> in_span_of_products(
    const TensorVector& t, const std::vector<TensorVector>& rank1s,
    const std::vector<TensorVector>& rank2s) {
  if (t.rank != 3) throw RankOutOfRange("decomposition target must be rank 3");
  std::vector<TensorVector> products;
  for (const auto& v : rank1s)
    for (const auto& g : rank2s) products.push_back(symmetrized_product(v, g));
  RatMatrix a(64, products.size());
  for (std::size_t col = 0; col < products.size(); ++col)
    for (std::size_t row = 0; row < 64; ++row)
      a(row, col) = products[col].components[row];
  AffineSolution sol = solve_affine(a, t.components);
  if (!sol.feasible) return std::nullopt;
  return sol.particular;
}

}  // namespace vsr
