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

#include "superweave/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace superweave {
namespace {

using namespace std::complex_literals;

CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = Complex(g(rng), g(rng));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

CMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  CMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a;
}

// Coefficients c[0..n] of det(lambda I - A) by Faddeev-LeVerrier.
std::vector<Complex> characteristic_polynomial(const CMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  CMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    CMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex s{};
  for (std::size_t k = c.size(); k-- > 0;) s = s * z + c[k];
  return s;
}

// Durand-Kerner followed by Newton polishing; returns sorted real parts.
std::vector<double> polynomial_real_roots(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i));
  for (int it = 0; it < 2000; ++it) {
    double move = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const Complex step = horner(c, z[i]) / den;
      z[i] -= step;
      move = std::max(move, std::abs(step));
    }
    if (move < 1e-15) break;
  }
  std::vector<Complex> dc(n);
  for (std::size_t k = 1; k <= n; ++k) dc[k - 1] = static_cast<double>(k) * c[k];
  std::vector<double> out;
  for (Complex r : z) {
    for (int it = 0; it < 5; ++it) {
      const Complex d = horner(dc, r);
      if (d == Complex{}) break;
      r -= horner(c, r) / d;
    }
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(InnerTest, OrthonormalIdentities) {
  const CVector e1 = CVector::basis(2, 0);
  const CVector e2 = CVector::basis(2, 1);
  EXPECT_EQ(inner(e1, e1), Complex(1.0));
  EXPECT_EQ(inner(e1, e2), Complex(0.0));
}

TEST(InnerTest, ConjugatesSecondSlot) {
  const CVector u{1.0 + 1.0i, 0.0};
  const CVector v{1.0i, 0.0};
  // (1+i) * conj(i) = (1+i)(-i) = 1 - i; summed in reverse order as a check.
  Complex reverse{};
  for (std::size_t k = u.dim(); k-- > 0;) reverse += u[k] * std::conj(v[k]);
  EXPECT_EQ(inner(u, v), Complex(1.0, -1.0));
  EXPECT_EQ(reverse, Complex(1.0, -1.0));
}

TEST(InnerTest, DimensionMismatchThrows) {
  EXPECT_THROW(inner(CVector(2), CVector(3)), Error);
}

TEST(InnerTest, HermitianSymmetryProperty) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + t % 7;
    CVector u(d), v(d);
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = Complex(g(rng), g(rng));
      v[i] = Complex(g(rng), g(rng));
    }
    const Complex a = inner(u, v);
    const Complex b = std::conj(inner(v, u));
    EXPECT_NEAR(a.real(), b.real(), 1e-12);
    EXPECT_NEAR(a.imag(), b.imag(), 1e-12);
  }
}

TEST(CVectorTest, RejectsNonFinite) {
  EXPECT_THROW(CVector({Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}), Error);
  EXPECT_THROW(CVector({Complex(0.0, std::numeric_limits<double>::infinity())}), Error);
}

TEST(HermitianEigTest, Diagonal) {
  const EigenResult e = hermitian_eig(CMatrix::from_rows({{2.0, 0.0}, {0.0, 1.0}}));
  ASSERT_EQ(e.eigenvalues.size(), 2u);
  EXPECT_DOUBLE_EQ(e.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(e.eigenvalues[1], 2.0);
}

TEST(HermitianEigTest, AllOnes) {
  const EigenResult e = hermitian_eig(CMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}}));
  EXPECT_NEAR(e.eigenvalues[0], 0.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 2.0, 1e-15);
}

TEST(HermitianEigTest, MatchesCharacteristicPolynomialRoots) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 5; ++t) {
    const CMatrix h = random_hermitian(rng, 6);
    const std::vector<double> oracle = polynomial_real_roots(characteristic_polynomial(h));
    const EigenResult e = hermitian_eig(h);
    ASSERT_EQ(oracle.size(), e.eigenvalues.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
      EXPECT_NEAR(e.eigenvalues[i], oracle[i], 1e-8) << "trial " << t << " index " << i;
  }
}

TEST(HermitianEigTest, ResidualTraceAndOrthonormality) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 24u}) {
    const CMatrix h = random_hermitian(rng, n);
    const EigenResult e = hermitian_eig(h);
    ASSERT_TRUE(e.eigenvectors.has_value());
    const double scale = 1.0 + h.frobenius();
    EXPECT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    for (std::size_t j = 0; j < n; ++j) {
      const CVector v = e.eigenvectors->column(j);
      const CVector r = h * v - e.eigenvalues[j] * v;
      EXPECT_LE(r.norm(), kDefaultEigTol * scale) << "n=" << n << " j=" << j;
    }
    const CMatrix vv = e.eigenvectors->adjoint() * *e.eigenvectors;
    EXPECT_LE((vv - CMatrix::identity(n)).frobenius(), 1e-12);
    double sum = 0.0;
    for (double l : e.eigenvalues) sum += l;
    const double tr = h.trace().real();
    EXPECT_NEAR(sum, tr, 1e-9 * (1.0 + std::abs(tr)));
  }
}

TEST(HermitianEigTest, SymmetrizesSlightlyNonHermitianInput) {
  CMatrix a = CMatrix::from_rows({{2.0, 1.0 + 1e-13}, {1.0, 2.0}});
  const EigenResult e = hermitian_eig(a);
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-12);
  EXPECT_NEAR(e.eigenvalues[1], 3.0, 1e-12);
}

TEST(HermitianEigTest, Errors) {
  EXPECT_THROW(hermitian_eig(CMatrix(2, 3)), Error);
  CMatrix bad(2, 2);
  bad(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(hermitian_eig(bad), Error);
}

TEST(OperatorNormTest, Examples) {
  EXPECT_DOUBLE_EQ(operator_norm(CMatrix::identity(5)), 1.0);
  EXPECT_DOUBLE_EQ(operator_norm(0.25 * CMatrix::identity(5)), 0.25);
  EXPECT_NEAR(operator_norm(CMatrix::from_rows({{3.0}, {4.0}})), 5.0, 1e-14);
  EXPECT_EQ(operator_norm(CMatrix(3, 2)), 0.0);
}

TEST(OperatorNormTest, DominatesSampledUnitVectorsAndMatchesPowerIteration) {
  std::mt19937_64 rng(70);
  std::normal_distribution<double> g;
  for (int t = 0; t < 6; ++t) {
    const std::size_t r = 1 + t % 4;
    const std::size_t c = 1 + (t * 3) % 5;
    const CMatrix m = random_matrix(rng, r, c);
    const double norm = operator_norm(m);
    double sampled = 0.0;
    CVector best(c);
    for (int s = 0; s < 10000; ++s) {
      CVector x(c);
      for (std::size_t i = 0; i < c; ++i) x[i] = Complex(g(rng), g(rng));
      x *= 1.0 / x.norm();
      const double v = (m * x).norm();
      if (v > sampled) {
        sampled = v;
        best = x;
      }
    }
    EXPECT_LE(sampled, norm * (1.0 + 1e-12));
    // Power iteration on M* M from the best sample.
    const CMatrix mtm = m.adjoint() * m;
    CVector x = best;
    for (int it = 0; it < 5000; ++it) {
      x = mtm * x;
      x *= 1.0 / x.norm();
    }
    EXPECT_NEAR((m * x).norm(), norm, 1e-6 * norm);
  }
}

}  // namespace
}  // namespace superweave
