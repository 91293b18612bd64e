// Copyright 2026 The superweave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERWEAVE_LINALG_HPP_
#define SUPERWEAVE_LINALG_HPP_

// Dense complex vectors/matrices and a Hermitian eigensolver (cyclic Jacobi).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superweave {

using Complex = std::complex<double>;

inline constexpr double kDefaultEigTol = 1e-10;

// Raised for shape mismatches, non-finite data and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : coords_(dim, Complex{}) {}
  explicit CVector(std::vector<Complex> coords) : coords_(std::move(coords)) {
    for (const Complex& z : coords_) {
      if (!is_finite(z)) throw Error("CVector: non-finite coordinate");
    }
  }
  CVector(std::initializer_list<Complex> coords)
      : CVector(std::vector<Complex>(coords)) {}

  // Canonical basis vector e_k (0-based k).
  static CVector basis(std::size_t dim, std::size_t k) {
    CVector v(dim);
    v.coords_.at(k) = 1.0;
    return v;
  }

  std::size_t dim() const { return coords_.size(); }
  Complex& operator[](std::size_t i) { return coords_[i]; }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Complex> coords() const { return coords_; }
  std::span<Complex> coords() { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](Complex z) { return z == Complex{}; });
  }

  double norm() const {
    double s = 0.0;
    for (const Complex& z : coords_) s += std::norm(z);
    return std::sqrt(s);
  }

  CVector& operator+=(const CVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  CVector& operator-=(const CVector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  CVector& operator*=(Complex s) {
    for (Complex& z : coords_) z *= s;
    return *this;
  }

  friend CVector operator+(CVector a, const CVector& b) { return a += b; }
  friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
  friend CVector operator*(Complex s, CVector a) { return a *= s; }
  friend bool operator==(const CVector& a, const CVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  void check_same(const CVector& o) const {
    if (o.dim() != dim()) throw Error("CVector: dimension mismatch");
  }

  std::vector<Complex> coords_;
};

// Sum_k u_k conj(v_k): linear in u, conjugate-linear in v.
inline Complex inner(const CVector& u, const CVector& v) {
  if (u.dim() != v.dim()) {
    throw Error("inner: dimension mismatch (" + std::to_string(u.dim()) +
                " vs " + std::to_string(v.dim()) + ")");
  }
  Complex s{};
  for (std::size_t k = 0; k < u.dim(); ++k) s += u[k] * std::conj(v[k]);
  return s;
}

// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    CMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error("CMatrix::from_rows: ragged rows");
      std::size_t j = 0;
      for (const Complex& z : row) m(i, j++) = z;
      ++i;
    }
    return m;
  }

  // Matrix whose columns are the given vectors.
  static CMatrix from_columns(std::span<const CVector> cols, std::size_t dim) {
    CMatrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].dim() != dim) throw Error("CMatrix::from_columns: bad dim");
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  CVector column(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), is_finite);
  }

  CMatrix adjoint() const {
    CMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
    return t;
  }

  Complex trace() const {
    Complex s{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  // Frobenius norm.
  double frobenius() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  CMatrix& operator+=(const CMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  CMatrix& operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("CMatrix product: shape mismatch");
    CMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend CVector operator*(const CMatrix& a, const CVector& x) {
    if (a.cols_ != x.dim()) throw Error("CMatrix*CVector: shape mismatch");
    CVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Complex s{};
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k) * x[k];
      y[i] = s;
    }
    return y;
  }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const CMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw Error("CMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  // Column j is the unit eigenvector for eigenvalues[j].
  std::optional<CMatrix> eigenvectors;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

namespace detail {

inline double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

// Eigen-decomposition of the Hermitian part (M + M*)/2 by cyclic Jacobi
// rotations. Sweeps stop once the off-diagonal mass drops below
// tol * 1e-6 * ||M||_F (or it underflows); the residual contract
// ||M v - lambda v|| <= tol (1 + ||M||) is checked by the test suite.
inline EigenResult hermitian_eig(const CMatrix& m, double tol = kDefaultEigTol,
                                 bool want_vectors = true) {
  if (!m.is_square()) throw Error("hermitian_eig: matrix is not square");
  if (m.rows() == 0) throw Error("hermitian_eig: empty matrix");
  if (!m.all_finite()) throw Error("hermitian_eig: non-finite entries");

  const std::size_t n = m.rows();
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }
  CMatrix v = CMatrix::identity(n);

  const double scale = a.frobenius();
  const double stop = std::max(scale * tol * 1e-6,
                               std::numeric_limits<double>::min());
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = [[c, s], [-s conj(phase), c conj(phase)]] on rows/cols (p, q).
        const Complex u_pp = c;
        const Complex u_pq = s;
        const Complex u_qp = -s * std::conj(phase);
        const Complex u_qq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {  // a <- a U
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- U* a
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * u_pp + vkq * u_qp;
            v(k, q) = vkp * u_pq + vkq * u_qq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenResult out;
  out.eigenvalues.reserve(n);
  for (std::size_t j : order) out.eigenvalues.push_back(a(j, j).real());
  if (want_vectors) {
    CMatrix sorted(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) sorted(r, c) = v(r, order[c]);
    out.eigenvectors = std::move(sorted);
  }
  return out;
}

// Largest singular value, sqrt(lambda_max(M* M)).
inline double operator_norm(const CMatrix& m) {
  if (!m.all_finite()) throw Error("operator_norm: non-finite entries");
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const CMatrix gram = m.cols() <= m.rows() ? m.adjoint() * m : m * m.adjoint();
  const double top = hermitian_eig(gram, kDefaultEigTol, false).max();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace superweave

#endif  // SUPERWEAVE_LINALG_HPP_
