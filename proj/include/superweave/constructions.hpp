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

#ifndef SUPERWEAVE_CONSTRUCTIONS_HPP_
#define SUPERWEAVE_CONSTRUCTIONS_HPP_

// Deterministic generators for the standard weaving examples.
//
// Infinite index sets are truncated to {1, ..., n}. Documentation below uses
// those 1-based indices; the families themselves are 0-based, so 1-based
// index i lives at position i - 1.

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "superweave/frame.hpp"
#include "superweave/linalg.hpp"

namespace superweave {

/// The pair {F_1, F_2, I}, {G_1, G_2, I}.
using SuperFramePair = std::array<SuperFrameFamily, 2>;

namespace detail {

// Family of n vectors in C^d; position i - 1 holds e_j for each
// (i, j) in `hits` (1-based), zero elsewhere.
inline FrameFamily pattern_family(std::size_t d, std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& hits) {
  std::vector<CVector> v(n, CVector(d));
  for (auto [i, j] : hits) v.at(i - 1)[j - 1] = 1.0;
  return FrameFamily(d, std::move(v));
}

}  // namespace detail

/// Period-4 pattern over n = 4d indices in C^d (+) C^d:
///   F_1: e_j at 4j-3          G_1: e_j at 4j-3, 4j-1
///   F_2: e_j at 4j            G_2: e_j at 4j-2, 4j
/// Woven with universal bounds A = 1, B = 2.
inline SuperFramePair gen_example_3_3(std::size_t d) {
  if (d < 1) throw Error("gen_example_3_3: d must be >= 1");
  const std::size_t n = 4 * d;
  std::vector<std::pair<std::size_t, std::size_t>> f1, f2, g1, g2;
  for (std::size_t j = 1; j <= d; ++j) {
    f1.emplace_back(4 * j - 3, j);
    f2.emplace_back(4 * j, j);
    g1.emplace_back(4 * j - 3, j);
    g1.emplace_back(4 * j - 1, j);
    g2.emplace_back(4 * j - 2, j);
    g2.emplace_back(4 * j, j);
  }
  using detail::pattern_family;
  return {SuperFrameFamily({pattern_family(d, n, f1), pattern_family(d, n, f2)}),
          SuperFrameFamily({pattern_family(d, n, g1), pattern_family(d, n, g2)})};
}

/// Period-6 pattern over n = 6d indices:
///   F_1: e_j at 6j            G_1: e_j at 6j-3, 6j-1, 6j
///   F_2: e_j at 6j-1          G_2: e_j at 6j-4, 6j-1, 6j
/// Both are superframes but they are not woven: sigma = I \ {5, 6} (the
/// F family everywhere except 1-based 5, 6) kills (-e_1) (+) e_1.
inline SuperFramePair gen_example_3_4(std::size_t d) {
  if (d < 2) throw Error("gen_example_3_4: d must be >= 2");
  const std::size_t n = 6 * d;
  std::vector<std::pair<std::size_t, std::size_t>> f1, f2, g1, g2;
  for (std::size_t j = 1; j <= d; ++j) {
    f1.emplace_back(6 * j, j);
    f2.emplace_back(6 * j - 1, j);
    for (std::size_t i : {6 * j - 3, 6 * j - 1, 6 * j}) g1.emplace_back(i, j);
    for (std::size_t i : {6 * j - 4, 6 * j - 1, 6 * j}) g2.emplace_back(i, j);
  }
  using detail::pattern_family;
  return {SuperFrameFamily({pattern_family(d, n, f1), pattern_family(d, n, f2)}),
          SuperFrameFamily({pattern_family(d, n, g1), pattern_family(d, n, g2)})};
}

/// Component pairs {F_j, G_j} of gen_example_3_4 for j = 1, 2. Each pair
/// is woven in its atomic space with bounds (1, 3).
inline std::array<std::array<FrameFamily, 2>, 2> example_3_4_components(
    std::size_t d) {
  const SuperFramePair s = gen_example_3_4(d);
  return {{{s[0].component(0), s[1].component(0)},
           {s[0].component(1), s[1].component(1)}}};
}

/// F_1: e_j at 2j-1, F_2: e_j at 2j over n = 2d indices. The direct sum
/// is a permutation of the canonical basis of C^{2d}; neither component is
/// a Riesz sequence.
inline SuperFrameFamily gen_remark_4_5(std::size_t d) {
  if (d < 1) throw Error("gen_remark_4_5: d must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> f1, f2;
  for (std::size_t j = 1; j <= d; ++j) {
    f1.emplace_back(2 * j - 1, j);
    f2.emplace_back(2 * j, j);
  }
  return SuperFrameFamily({detail::pattern_family(d, 2 * d, f1),
                           detail::pattern_family(d, 2 * d, f2)});
}

/// Interleaves woven pairs (Phi1, Psi1) on H_1 and (Phi2, Psi2) on H_2 into
/// superframes over n1 + n2 indices: slots [0, n1) carry (phi^1_i, 0) and
/// slots [n1, n1 + n2) carry (0, phi^2_i); likewise for psi. They are woven
/// with bounds (min{A_1, A_2}, max{B_1, B_2}).
inline SuperFramePair interleave_theorem_3_9(const FrameFamily& phi1,
                                             const FrameFamily& psi1,
                                             const FrameFamily& phi2,
                                             const FrameFamily& psi2) {
  if (phi1.size() != psi1.size() || phi1.dim() != psi1.dim())
    throw Error("interleave_theorem_3_9: Phi1 and Psi1 differ in shape");
  if (phi2.size() != psi2.size() || phi2.dim() != psi2.dim())
    throw Error("interleave_theorem_3_9: Phi2 and Psi2 differ in shape");
  const std::size_t n1 = phi1.size();
  const std::size_t n2 = phi2.size();
  auto build = [&](const FrameFamily& a, const FrameFamily& b) {
    std::vector<CVector> c1, c2;
    for (std::size_t i = 0; i < n1; ++i) {
      c1.push_back(a[i]);
      c2.emplace_back(b.dim());
    }
    for (std::size_t i = 0; i < n2; ++i) {
      c1.emplace_back(a.dim());
      c2.push_back(b[i]);
    }
    return SuperFrameFamily(
        {FrameFamily(a.dim(), std::move(c1)), FrameFamily(b.dim(), std::move(c2))});
  };
  return {build(phi1, phi2), build(psi1, psi2)};
}

/// Operator-perturbation data for superframes with one Riesz component.
///
/// For each family i the Riesz component is
///   f_k^i = chi_k - sum_{p < P} alpha[k][p][i] T[p][i] e_k,   k < n,
/// which is woven-Riesz as soon as
///   lambda_i = sum_p ||T[p][i]|| max_k |alpha[k][p][i]| < 3^{-(m-1)/2}.
struct Theorem49Config {
  std::size_t m = 2;
  std::size_t L = 2;
  std::size_t n = 1;
  std::size_t P = 1;
  std::size_t dim = 1;
  std::size_t riesz_component = 0;  // 0-based
  std::vector<std::vector<CMatrix>> operators;  // [p][i], dim x dim
  std::vector<Complex> alphas;                  // flat [k][p][i]
  FrameFamily chi_basis;
  FrameFamily e_basis;
  std::vector<double> lambdas;

  Complex alpha(std::size_t k, std::size_t p, std::size_t i) const {
    return alphas.at((k * P + p) * m + i);
  }
  Complex& alpha(std::size_t k, std::size_t p, std::size_t i) {
    return alphas.at((k * P + p) * m + i);
  }

  /// 3^{-(m-1)/2}.
  double threshold() const {
    return std::pow(3.0, -(static_cast<double>(m) - 1.0) / 2.0);
  }

  /// Allocates zero operators and coefficients, canonical chi and e.
  static Theorem49Config zeros(std::size_t m, std::size_t L, std::size_t n,
                               std::size_t P, std::size_t dim,
                               std::size_t riesz_component) {
    Theorem49Config c;
    c.m = m;
    c.L = L;
    c.n = n;
    c.P = P;
    c.dim = dim;
    c.riesz_component = riesz_component;
    c.operators.assign(P, std::vector<CMatrix>(m, CMatrix(dim, dim)));
    c.alphas.assign(n * P * m, Complex{});
    c.chi_basis = FrameFamily::canonical_basis(dim);
    c.e_basis = FrameFamily::canonical_basis(dim);
    return c;
  }
};

/// lambda_i = sum_p ||T[p][i]|| max_{k<n} |alpha[k][p][i]|.
inline std::vector<double> compute_lambdas(const Theorem49Config& cfg) {
  std::vector<double> out(cfg.m, 0.0);
  for (std::size_t i = 0; i < cfg.m; ++i) {
    for (std::size_t p = 0; p < cfg.P; ++p) {
      double sup = 0.0;
      for (std::size_t k = 0; k < cfg.n; ++k)
        sup = std::max(sup, std::abs(cfg.alpha(k, p, i)));
      if (sup == 0.0) continue;
      out[i] += operator_norm(cfg.operators[p][i]) * sup;
    }
  }
  return out;
}

namespace detail {

inline bool is_orthonormal_basis(const FrameFamily& b, std::size_t dim,
                                 double tol) {
  if (b.dim() != dim || b.size() != dim) return false;
  const CMatrix g = gram(b);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (std::abs(g(r, c) - (r == c ? 1.0 : 0.0)) > tol) return false;
  return true;
}

}  // namespace detail

/// Checks shapes and bases, fills cfg.lambdas and enforces the criterion.
inline void validate(Theorem49Config& cfg) {
  if (cfg.m < 1 || cfg.L < 1 || cfg.n < 1 || cfg.P < 1 || cfg.dim < 1)
    throw Error("Theorem49Config: m, L, n, P and dim must all be >= 1");
  if (cfg.riesz_component >= cfg.L)
    throw Error("Theorem49Config: riesz_component out of range");
  if (cfg.n > cfg.dim)
    throw Error("Theorem49Config: n exceeds the atomic dimension");
  if (cfg.operators.size() != cfg.P)
    throw Error("Theorem49Config: operator table must have P rows");
  for (const auto& row : cfg.operators) {
    if (row.size() != cfg.m)
      throw Error("Theorem49Config: operator table must have m columns");
    for (const CMatrix& t : row)
      if (t.rows() != cfg.dim || t.cols() != cfg.dim)
        throw Error("Theorem49Config: operators must be dim x dim");
  }
  if (cfg.alphas.size() != cfg.n * cfg.P * cfg.m)
    throw Error("Theorem49Config: alpha table must have n*P*m entries");
  if (!detail::is_orthonormal_basis(cfg.chi_basis, cfg.dim, 1e-10))
    throw Error("Theorem49Config: chi_basis is not orthonormal");
  if (!detail::is_orthonormal_basis(cfg.e_basis, cfg.dim, 1e-10))
    throw Error("Theorem49Config: e_basis is not orthonormal");
  cfg.lambdas = compute_lambdas(cfg);
  const double limit = cfg.threshold();
  for (std::size_t i = 0; i < cfg.m; ++i) {
    if (!(cfg.lambdas[i] < limit)) {
      throw Error("Theorem49Config: lambda_" + std::to_string(i + 1) + " = " +
                  std::to_string(cfg.lambdas[i]) +
                  " violates lambda_i < 3^{-(m-1)/2} = " + std::to_string(limit));
    }
  }
}

/// The n Riesz-component vectors of family i.
inline FrameFamily perturbed_riesz_component(const Theorem49Config& cfg,
                                             std::size_t i) {
  std::vector<CVector> out;
  for (std::size_t k = 0; k < cfg.n; ++k) {
    CVector v = cfg.chi_basis[k];
    for (std::size_t p = 0; p < cfg.P; ++p) {
      const Complex a = cfg.alpha(k, p, i);
      if (a == Complex{}) continue;
      v -= a * (cfg.operators[p][i] * cfg.e_basis[k]);
    }
    out.push_back(std::move(v));
  }
  return FrameFamily(cfg.dim, std::move(out));
}

/// Builds m superframes whose riesz_component is perturbed_riesz_component
/// and whose other components come from bessel_components[i] (L - 1
/// families each, in component order).
inline std::vector<SuperFrameFamily> gen_theorem_4_9(
    Theorem49Config& cfg,
    const std::vector<std::vector<FrameFamily>>& bessel_components) {
  validate(cfg);
  if (bessel_components.size() != cfg.m)
    throw Error("gen_theorem_4_9: need Bessel components for every family");
  std::vector<SuperFrameFamily> out;
  for (std::size_t i = 0; i < cfg.m; ++i) {
    const auto& others = bessel_components[i];
    if (others.size() + 1 != cfg.L)
      throw Error("gen_theorem_4_9: family " + std::to_string(i + 1) +
                  " needs L - 1 Bessel components");
    std::vector<FrameFamily> comps;
    std::size_t o = 0;
    for (std::size_t j = 0; j < cfg.L; ++j) {
      if (j == cfg.riesz_component) {
        comps.push_back(perturbed_riesz_component(cfg, i));
        continue;
      }
      const FrameFamily& b = others[o++];
      if (b.size() != cfg.n)
        throw Error("gen_theorem_4_9: Bessel component index count != n");
      if (!std::isfinite(bessel_bound(b)))
        throw Error("gen_theorem_4_9: component is not a Bessel sequence");
      comps.push_back(b);
    }
    out.emplace_back(std::move(comps));
  }
  return out;
}

/// How T_p^1 (xi) = {0, ..., 0, xi_p, xi_{p+1}, ...} is read.
enum class ShiftReading {
  kPrefixAnnihilation,  // keep coordinates p, p+1, ... in place
  kRightShift,          // (xi_1, xi_2, ...) moved right by p - 1 places
};

struct Example410 {
  Theorem49Config config;
  SuperFramePair supers;
  double eps = 0.0;
};

/// Upper limit 6 / (sqrt(3) pi^2) for eps (sum 1/k^2 = pi^2 / 6).
inline double example_4_10_eps_limit() {
  return 6.0 / (std::sqrt(3.0) * std::numbers::pi * std::numbers::pi);
}

/// L = m = 2, Riesz component 2, atomic spaces C^d, indices 1..n, p = 1..P.
///   T_p^1 per `reading`;  T_p^2 (xi) = (xi_p / 4, xi_{p+1} / 4, ...)
///   alpha_{kp}^1 = eps / k^2 for k >= p, else 0
///   alpha_{kp}^2 = 4 eps / k^2 for k >= p + 1, else 0
///   f_{1k}^1 = e_k + e_{k+1},  f_{1k}^2 = e_k + e_{k+1} + e_{k+2}
inline Example410 gen_example_4_10(
    std::size_t d, std::size_t n, std::size_t P, double eps,
    ShiftReading reading = ShiftReading::kPrefixAnnihilation) {
  const double eps_max = example_4_10_eps_limit();
  if (!(eps > 0.0 && eps < eps_max))
    throw Error("gen_example_4_10: eps must lie in (0, 6/(sqrt(3) pi^2)) = (0, " +
                std::to_string(eps_max) + ")");
  if (n < 1 || P < 1) throw Error("gen_example_4_10: n and P must be >= 1");
  if (n + 2 > d) throw Error("gen_example_4_10: need n <= d - 2");

  Example410 ex;
  ex.eps = eps;
  Theorem49Config& cfg = ex.config;
  cfg = Theorem49Config::zeros(2, 2, n, P, d, 1);
  for (std::size_t p = 1; p <= P; ++p) {
    CMatrix& t1 = cfg.operators[p - 1][0];
    CMatrix& t2 = cfg.operators[p - 1][1];
    for (std::size_t r = 1; r <= d; ++r) {
      if (reading == ShiftReading::kPrefixAnnihilation) {
        if (r >= p) t1(r - 1, r - 1) = 1.0;
      } else if (r >= p) {
        t1(r - 1, r - p) = 1.0;  // out_r = xi_{r-p+1}
      }
      if (r + p - 1 <= d) t2(r - 1, r + p - 2) = 0.25;  // out_r = xi_{r+p-1}/4
    }
    for (std::size_t k = 1; k <= n; ++k) {
      const double kk = static_cast<double>(k * k);
      if (k >= p) cfg.alpha(k - 1, p - 1, 0) = eps / kk;
      if (k >= p + 1) cfg.alpha(k - 1, p - 1, 1) = 4.0 * eps / kk;
    }
  }

  std::vector<CVector> b1, b2;
  for (std::size_t k = 0; k < n; ++k) {
    CVector u(d), w(d);
    u[k] = u[k + 1] = 1.0;
    w[k] = w[k + 1] = w[k + 2] = 1.0;
    b1.push_back(std::move(u));
    b2.push_back(std::move(w));
  }
  const std::vector<std::vector<FrameFamily>> bessel = {
      {FrameFamily(d, std::move(b1))}, {FrameFamily(d, std::move(b2))}};
  std::vector<SuperFrameFamily> supers = gen_theorem_4_9(cfg, bessel);
  ex.supers = {std::move(supers[0]), std::move(supers[1])};
  return ex;
}

}  // namespace superweave

#endif  // SUPERWEAVE_CONSTRUCTIONS_HPP_
