#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vsr/rational.hpp"

namespace vsr {

/// Dense matrix of arbitrary-precision rationals. Row-major storage.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rat& s) const;
  RatMatrix transposed() const;
  RatVec apply(const RatVec& v) const;

  bool operator==(const RatMatrix& rhs) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// A linear subspace given by a canonical basis: RREF rows with leading
/// entry +1, sorted by pivot column. Two equal subspaces compare equal.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<RatVec> vectors;

  std::size_t dim() const { return vectors.size(); }
  bool empty() const { return vectors.empty(); }
  bool operator==(const SubspaceBasis& rhs) const = default;

  /// Membership test (exact).
  bool contains(const RatVec& v) const;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

/// Exact kernel {v : M v = 0}, canonical form.
SubspaceBasis null_space(const RatMatrix& m);

struct AffineSolution {
  bool feasible = false;
  RatVec particular;       // one exact solution of A x = b
  SubspaceBasis kernel;    // solution set = particular + kernel
};

/// Exact affine solve. Infeasibility is reported, not thrown.
AffineSolution solve_affine(const RatMatrix& a, const RatVec& b);

/// Exact intersection of two subspaces of the same ambient dimension.
/// Throws std::invalid_argument on an ambient-dimension mismatch.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Canonicalizes an arbitrary spanning set into RREF basis form.
SubspaceBasis span_of(std::size_t ambient_dim, std::vector<RatVec> vectors);

/// Best continued-fraction approximation of x with denominator <= max_den.
/// Exact round-trip for doubles that represent n/d with d <= max_den.
Rat rationalize(double x, long max_den);

/// Real eigenvalues (|Im| <= tol) of a square double matrix, deduplicated
/// with gap tol and sorted ascending, with algebraic multiplicities.
/// Throws std::runtime_error if the eigensolver fails to converge.
std::vector<std::pair<double, int>> real_eigenvalues(
    const std::vector<double>& m, std::size_t n, double tol = 1e-9);

}  // namespace vsr
