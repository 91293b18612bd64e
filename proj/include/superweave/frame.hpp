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

#ifndef SUPERWEAVE_FRAME_HPP_
#define SUPERWEAVE_FRAME_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "superweave/linalg.hpp"

namespace superweave {

inline constexpr double kDefaultFrameTol = 1e-8;

/// A finite indexed family {f_k}, k = 0..n-1, in C^dim. Zero vectors are
/// legal members.
class FrameFamily {
 public:
  FrameFamily() = default;
  FrameFamily(std::size_t dim, std::vector<CVector> vectors)
      : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw Error("FrameFamily: dimension must be >= 1");
    if (vectors_.empty()) throw Error("FrameFamily: family must be non-empty");
    for (std::size_t k = 0; k < vectors_.size(); ++k) {
      if (vectors_[k].dim() != dim_) {
        throw Error("FrameFamily: vector " + std::to_string(k) + " has dim " +
                    std::to_string(vectors_[k].dim()) + ", expected " +
                    std::to_string(dim_));
      }
    }
  }

  /// Canonical orthonormal basis of C^dim.
  static FrameFamily canonical_basis(std::size_t dim) {
    std::vector<CVector> v;
    v.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) v.push_back(CVector::basis(dim, k));
    return FrameFamily(dim, std::move(v));
  }

  /// Columns of a dim x n matrix.
  static FrameFamily from_synthesis(const CMatrix& syn) {
    std::vector<CVector> v;
    v.reserve(syn.cols());
    for (std::size_t c = 0; c < syn.cols(); ++c) v.push_back(syn.column(c));
    return FrameFamily(syn.rows(), std::move(v));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const CVector& operator[](std::size_t k) const { return vectors_[k]; }
  const std::vector<CVector>& vectors() const { return vectors_; }

  /// dim x n matrix with the family vectors as columns.
  CMatrix synthesis() const { return CMatrix::from_columns(vectors_, dim_); }

  friend bool operator==(const FrameFamily& a, const FrameFamily& b) {
    return a.dim_ == b.dim_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<CVector> vectors_;
};

/// L component families sharing one index count n; component dims may differ.
class SuperFrameFamily {
 public:
  SuperFrameFamily() = default;
  explicit SuperFrameFamily(std::vector<FrameFamily> components)
      : components_(std::move(components)) {
    if (components_.empty()) throw Error("SuperFrameFamily: no components");
    const std::size_t n = components_.front().size();
    for (std::size_t j = 0; j < components_.size(); ++j) {
      if (components_[j].size() != n) {
        throw Error("SuperFrameFamily: component " + std::to_string(j) +
                    " has " + std::to_string(components_[j].size()) +
                    " vectors, expected " + std::to_string(n));
      }
    }
  }

  std::size_t num_components() const { return components_.size(); }
  std::size_t size() const { return components_.front().size(); }
  const FrameFamily& component(std::size_t j) const { return components_.at(j); }
  const std::vector<FrameFamily>& components() const { return components_; }

  std::vector<std::size_t> component_dims() const {
    std::vector<std::size_t> d;
    for (const auto& c : components_) d.push_back(c.dim());
    return d;
  }

  /// Dimension of H_1 (+) ... (+) H_L.
  std::size_t ambient_dim() const {
    std::size_t d = 0;
    for (const auto& c : components_) d += c.dim();
    return d;
  }

  friend bool operator==(const SuperFrameFamily& a, const SuperFrameFamily& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<FrameFamily> components_;
};

enum class BoundsKind { kFrame, kRiesz, kBesselOnly };

inline const char* to_string(BoundsKind k) {
  switch (k) {
    case BoundsKind::kFrame: return "frame-bounds";
    case BoundsKind::kRiesz: return "riesz-bounds";
    case BoundsKind::kBesselOnly: return "bessel-only";
  }
  return "?";
}

struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  BoundsKind kind = BoundsKind::kFrame;
  bool is_frame = false;
  bool is_tight = false;
  bool is_riesz_sequence = false;
  bool is_riesz_basis = false;
  double tol = kDefaultFrameTol;
};

struct PerturbationReport {
  double lambda = 0.0;
  bool basis_ok = false;  // lambda < 1
};

/// Positive-part cutoff used for every frame/Riesz/woven verdict.
inline bool above_cutoff(double lower, double upper, double tol) {
  return lower > tol * std::max(1.0, upper);
}

/// S = sum_k f_k f_k^*.
inline CMatrix frame_operator(const FrameFamily& f) {
  const std::size_t d = f.dim();
  CMatrix s(d, d);
  for (const CVector& v : f.vectors()) {
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] == Complex{}) continue;
      for (std::size_t j = 0; j < d; ++j) s(i, j) += v[i] * std::conj(v[j]);
    }
  }
  return s;
}

/// G[j, k] = <f_k, f_j>, so that c^* G c = ||sum_k c_k f_k||^2.
inline CMatrix gram(const FrameFamily& f) {
  const std::size_t n = f.size();
  CMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      const Complex z = inner(f[k], f[j]);
      g(j, k) = z;
      g(k, j) = std::conj(z);
    }
  }
  return g;
}

namespace detail {

inline std::pair<double, double> psd_extremes(const CMatrix& m) {
  const EigenResult e = hermitian_eig(m, kDefaultEigTol, false);
  return {std::max(0.0, e.min()), std::max(0.0, e.max())};
}

}  // namespace detail

/// Optimal frame bounds: the extreme eigenvalues of S.
inline BoundsReport frame_bounds(const FrameFamily& f,
                                 double tol = kDefaultFrameTol) {
  const auto [lo, hi] = detail::psd_extremes(frame_operator(f));
  BoundsReport r;
  r.kind = BoundsKind::kFrame;
  r.lower = lo;
  r.upper = hi;
  r.tol = tol;
  r.is_frame = above_cutoff(lo, hi, tol);
  r.is_tight = r.is_frame && std::abs(hi - lo) <= tol * hi;
  return r;
}

/// Optimal Bessel bound lambda_max(S).
inline double bessel_bound(const FrameFamily& f) {
  return detail::psd_extremes(frame_operator(f)).second;
}

/// Optimal Riesz-sequence bounds: the extreme eigenvalues of the Gram matrix.
inline BoundsReport riesz_sequence_bounds(const FrameFamily& f,
                                          double tol = kDefaultFrameTol) {
  const auto [lo, hi] = detail::psd_extremes(gram(f));
  BoundsReport r;
  r.kind = BoundsKind::kRiesz;
  r.lower = lo;
  r.upper = hi;
  r.tol = tol;
  r.is_riesz_sequence = above_cutoff(lo, hi, tol);
  r.is_riesz_basis = r.is_riesz_sequence && f.size() == f.dim();
  r.is_frame = r.is_riesz_basis;
  return r;
}

/// Canonical frame coefficients <S^{-1} f, f_k>.
inline std::vector<Complex> frame_coefficients(const CVector& x,
                                               const FrameFamily& f,
                                               double tol = kDefaultFrameTol) {
  if (x.dim() != f.dim()) throw Error("frame_coefficients: dimension mismatch");
  const EigenResult e = hermitian_eig(frame_operator(f));
  if (!above_cutoff(e.min(), e.max(), tol)) {
    throw Error("frame_coefficients: family is not a frame (lambda_min = " +
                std::to_string(e.min()) + ")");
  }
  const CMatrix& v = *e.eigenvectors;
  // S^{-1} x = V diag(1/lambda) V^* x
  CVector y = v.adjoint() * x;
  for (std::size_t i = 0; i < y.dim(); ++i) y[i] /= e.eigenvalues[i];
  const CVector s_inv_x = v * y;
  std::vector<Complex> c;
  c.reserve(f.size());
  for (const CVector& fk : f.vectors()) c.push_back(inner(s_inv_x, fk));
  return c;
}

/// sum_k c_k f_k.
inline CVector synthesize(std::span<const Complex> c, const FrameFamily& f) {
  if (c.size() != f.size()) throw Error("synthesize: coefficient count mismatch");
  CVector out(f.dim());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (c[k] == Complex{}) continue;
    for (std::size_t i = 0; i < f.dim(); ++i) out[i] += c[k] * f[k][i];
  }
  return out;
}

/// Stacks f_k^1 (+) ... (+) f_k^L for every index k.
inline FrameFamily direct_sum(const SuperFrameFamily& s) {
  const std::size_t n = s.size();
  const std::size_t dim = s.ambient_dim();
  std::vector<CVector> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CVector v(dim);
    std::size_t offset = 0;
    for (const FrameFamily& c : s.components()) {
      for (std::size_t i = 0; i < c.dim(); ++i) v[offset + i] = c[k][i];
      offset += c.dim();
    }
    out.push_back(std::move(v));
  }
  return FrameFamily(dim, std::move(out));
}

/// Least lambda with ||sum c_k (x_k - y_k)|| <= lambda ||sum c_k x_k|| for
/// every coefficient sequence: ||(X - Y) G_X^{-1/2}|| with G_X = X^* X.
/// For a square basis X this is ||(X - Y) X^{-1}||.
inline PerturbationReport perturbation_lambda(const FrameFamily& x,
                                              const FrameFamily& y,
                                              double tol = kDefaultFrameTol) {
  if (x.size() != y.size() || x.dim() != y.dim()) {
    throw Error("perturbation_lambda: families differ in shape");
  }
  if (x.size() > x.dim()) {
    throw Error("perturbation_lambda: X has more vectors than dimensions, so "
                "it is not a basis");
  }
  const EigenResult g = hermitian_eig(gram(x));
  if (!above_cutoff(g.min(), g.max(), tol)) {
    throw Error("perturbation_lambda: X is not a basis (Gram lambda_min = " +
                std::to_string(g.min()) + ")");
  }
  const std::size_t n = x.size();
  const CMatrix& v = *g.eigenvectors;
  CMatrix scaled = v;  // V diag(lambda^{-1/2})
  for (std::size_t c = 0; c < n; ++c) {
    const double w = 1.0 / std::sqrt(g.eigenvalues[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= w;
  }
  const CMatrix inv_sqrt = scaled * v.adjoint();
  const CMatrix diff = x.synthesis() - y.synthesis();
  PerturbationReport rep;
  rep.lambda = operator_norm(diff * inv_sqrt);
  rep.basis_ok = rep.lambda < 1.0;
  return rep;
}

}  // namespace superweave

#endif  // SUPERWEAVE_FRAME_HPP_
