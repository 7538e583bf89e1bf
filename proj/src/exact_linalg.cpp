#include "vsr/exact_linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vsr {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matmul shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  Rat acc;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) == 0) continue;
        out(i, j) += a * rhs(k, j);
      }
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matadd shape mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  return *this + rhs.scaled(Rat(-1));
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matvec shape mismatch");
  RatVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat& q) { return q == 0; });
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = col; j < m.cols(); ++j)
        std::swap(m(row, j), m(piv, j));
    Rat inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

bool SubspaceBasis::contains(const RatVec& v) const {
  // Reduce v against the (already canonical) RREF basis.
  RatVec r = v;
  for (const auto& b : vectors) {
    std::size_t p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p < b.size() && r[p] != 0) {
      Rat f = r[p];
      for (std::size_t j = p; j < r.size(); ++j) r[j] -= f * b[j];
    }
  }
  return std::all_of(r.begin(), r.end(), [](const Rat& q) { return q == 0; });
}

SubspaceBasis null_space(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = rref(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  SubspaceBasis out;
  out.ambient_dim = n;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(n, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.vectors.push_back(std::move(v));
  }
  // Free-column construction is already echelon in the free coordinates;
  // canonicalize to leading-one RREF form for stable comparisons.
  return span_of(n, std::move(out.vectors));
}

SubspaceBasis span_of(std::size_t ambient_dim, std::vector<RatVec> vectors) {
  RatMatrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  auto pivots = rref(m);
  SubspaceBasis out;
  out.ambient_dim = ambient_dim;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    RatVec v(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) v[j] = m(i, j);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

AffineSolution solve_affine(const RatMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  AffineSolution sol;
  if (!pivots.empty() && pivots.back() == a.cols()) return sol;  // 0 = 1 row
  sol.feasible = true;
  sol.particular.assign(a.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.particular[pivots[i]] = aug(i, a.cols());
  sol.kernel = null_space(a);
  return sol;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("subspace ambient dimension mismatch");
  const std::size_t n = a.ambient_dim;
  // Zassenhaus-free approach: v in A with v orthogonal to the row space
  // complement of B, i.e. solve [Ba^T | Bb^T] x = 0 and read the A-part.
  const std::size_t ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return SubspaceBasis{n, {}};
  RatMatrix m(n, ka + kb);
  for (std::size_t j = 0; j < ka; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = a.vectors[j][i];
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, ka + j) = -b.vectors[j][i];
  SubspaceBasis ker = null_space(m);
  std::vector<RatVec> vecs;
  for (const auto& x : ker.vectors) {
    RatVec v(n, Rat(0));
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += x[j] * a.vectors[j][i];
    vecs.push_back(std::move(v));
  }
  return span_of(n, std::move(vecs));
}

Rat rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite input");
  // Stern-Brocot / continued-fraction convergents with exact checks:
  // the double is converted exactly, then the best convergent with
  // denominator <= max_den is selected.
  Rat target(x);  // exact binary-to-rational conversion
  target.canonicalize();
  if (target.get_den() <= max_den) {
    // Might still round-trip to a simpler fraction; continued fractions
    // below would return target itself, so short-circuit.
  }
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rat rem = target;
  bool neg = rem < 0;
  if (neg) rem = -rem;
  while (true) {
    mpz_class a = rem.get_num() / rem.get_den();  // floor (rem >= 0)
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) {
      // Semiconvergent with the largest admissible coefficient.
      mpz_class k = (mpz_class(max_den) - q0) / q1;
      mpz_class ps = k * p1 + p0, qs = k * q1 + q0;
      Rat best(p1, q1), semi(ps, qs), t = neg ? -target : target;
      if (q1 == 0) { best = Rat(ps, qs); }
      Rat err_best = abs(best - t), err_semi = abs(semi - t);
      Rat res = (qs > 0 && err_semi < err_best) ? semi : best;
      res.canonicalize();
      return neg ? Rat(-res) : res;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    Rat frac = rem - Rat(a);
    if (frac == 0) {
      Rat res(p1, q1);
      res.canonicalize();
      return neg ? Rat(-res) : res;
    }
    rem = 1 / frac;
  }
}

std::vector<std::pair<double, int>> real_eigenvalues(
    const std::vector<double>& m, std::size_t n, double tol) {
  if (m.size() != n * n) throw std::invalid_argument("matrix size mismatch");
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m[i * n + j];
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolver did not converge");
  std::vector<double> vals;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    auto ev = es.eigenvalues()[i];
    if (std::abs(ev.imag()) <= tol) vals.push_back(ev.real());
  }
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<double, int>> out;
  for (double v : vals) {
    if (!out.empty() && std::abs(v - out.back().first) <= tol)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

}  // namespace vsr
