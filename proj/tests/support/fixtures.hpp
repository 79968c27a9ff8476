// Copyright 2026 The gcec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Closed-form Kraus sets and independent oracles shared by the unit and
// acceptance tests. Nothing here calls into the library's solvers.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "gcec/channel_core.hpp"
#include "gcec/linalg.hpp"

namespace gcec::testing {

inline const Complex kI{0.0, 1.0};

inline Complex omega3() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

// S3-covariant qutrit family with blocks [1] + 2-dim irrep (phase 0).
inline std::vector<Matrix> s3_family(Complex alpha, Complex beta, Complex gamma) {
  Matrix a1 = Matrix::Zero(3, 3), a2 = Matrix::Zero(3, 3);
  a1(0, 1) = alpha;
  a1(1, 0) = beta;
  a1(1, 1) = gamma;
  a1(2, 2) = -gamma;
  a2(0, 2) = alpha;
  a2(1, 2) = -gamma;
  a2(2, 0) = beta;
  a2(2, 1) = -gamma;
  return {a1, a2};
}

// Constant qutrit matrices printed for the A4 three-dimensional instance.
inline std::vector<Matrix> a4_constant_kraus() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex w = omega3();
  Matrix a1 = Matrix::Zero(3, 3), a2 = Matrix::Zero(3, 3), a3 = Matrix::Zero(3, 3);
  a1(1, 1) = s;
  a1(2, 2) = -s;
  a2(0, 1) = -s;
  a2(2, 0) = w * s;
  a3(0, 2) = s;
  a3(1, 0) = -w * s;
  return {a1, a2, a3};
}

inline std::vector<Matrix> d5_qutrit_kraus() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix a1 = Matrix::Zero(3, 3), a2 = Matrix::Zero(3, 3);
  a1(0, 1) = 1.0;
  a1(1, 0) = s;
  a2(0, 2) = 1.0;
  a2(2, 0) = s;
  return {a1, a2};
}

// Rank-one spherical tensors on a spin-1 space, ordered m = 1, 0, -1.
inline std::vector<Matrix> so3_qutrit_kraus(Complex a) {
  Matrix p = Matrix::Zero(3, 3);
  p(0, 1) = -a;
  p(1, 2) = -a;
  Matrix z = Matrix::Zero(3, 3);
  z(0, 0) = a;
  z(2, 2) = -a;
  return {p, z, Matrix(-p.adjoint())};
}

// Rank-two spherical tensors on a spin-2 space, ordered m = 2 .. -2.
inline std::vector<Matrix> so3_ququint_kraus(Complex a) {
  const double r6 = std::sqrt(6.0);
  Matrix a2 = Matrix::Zero(5, 5), a1 = Matrix::Zero(5, 5), a0 = Matrix::Zero(5, 5);
  a2(0, 2) = a;
  a2(1, 3) = 0.5 * r6 * a;
  a2(2, 4) = a;
  a1(0, 1) = -0.5 * r6 * a;
  a1(1, 2) = -0.5 * a;
  a1(2, 3) = 0.5 * a;
  a1(3, 4) = 0.5 * r6 * a;
  a0.diagonal() << a, -0.5 * a, -a, -0.5 * a, a;
  return {a2, a1, a0, Matrix(-a1.transpose()), Matrix(a2.transpose())};
}

// SU(2) channel on spin-j (+) singlet, j = (d-2)/2, normalized with
// 1/sqrt(d-1). Basis: index 0 is the singlet |e>, index 1 + k is |j, j-k>.
// Kraus index k carries m = j - k.
inline std::vector<Matrix> su2_singlet_kraus(int d) {
  const int n = d - 1;
  const double j = 0.5 * (d - 2);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d - 1));
  std::vector<Matrix> out;
  for (int k = 0; k < n; ++k) {
    const double m = j - k;
    Matrix a = Matrix::Zero(d, d);
    a(1 + k, 0) = norm;
    const int minus_m = static_cast<int>(std::lround(j + m));  // index of |j, -m>
    const int sign_exp = static_cast<int>(std::lround(j - m));
    a(0, 1 + minus_m) = sign_exp % 2 == 0 ? 1.0 : -1.0;
    out.push_back(a);
  }
  return out;
}

// Reorders a spherical-tensor Kraus list given as m = j .. -j into the slot
// order produced by the Lie kernel, where slot i carries (-1)^i A_{-(j-i)}.
// This is a unitary Kraus mixing, so the channel is unchanged.
inline std::vector<Matrix> to_kernel_order(const std::vector<Matrix>& ops) {
  const size_t K = ops.size();
  std::vector<Matrix> out;
  for (size_t i = 0; i < K; ++i) out.push_back((i % 2 == 0 ? 1.0 : -1.0) * ops[K - 1 - i]);
  return out;
}

// Choi matrix built entry by entry from the channel's action on matrix units:
// C_{mn,pq} = (1/d^2) <m| Phi(|n><q|) |p>.
inline Matrix choi_oracle(const std::vector<Matrix>& kraus) {
  const auto d = kraus.front().rows();
  Matrix c = Matrix::Zero(d * d, d * d);
  for (Eigen::Index n = 0; n < d; ++n)
    for (Eigen::Index q = 0; q < d; ++q) {
      Matrix unit = Matrix::Zero(d, d);
      unit(n, q) = 1.0;
      Matrix image = Matrix::Zero(d, d);
      for (const auto& a : kraus) image += a * unit * a.adjoint();
      for (Eigen::Index m = 0; m < d; ++m)
        for (Eigen::Index p = 0; p < d; ++p) c(m * d + n, p * d + q) = image(m, p) / double(d * d);
    }
  return c;
}

// Number of partitions of n into parts drawn from `allowed`, by brute-force
// recursion over non-increasing part sequences.
inline long long partitions_brute(int n, const std::vector<int>& allowed, int max_part = 1 << 30) {
  if (n == 0) return 1;
  long long total = 0;
  for (int p : allowed)
    if (p <= n && p <= max_part) total += partitions_brute(n - p, allowed, p);
  return total;
}

inline std::vector<int> odd_parts(int n) {
  std::vector<int> v;
  for (int p = 1; p <= n; p += 2) v.push_back(p);
  return v;
}

inline std::vector<int> all_parts(int n) {
  std::vector<int> v;
  for (int p = 1; p <= n; ++p) v.push_back(p);
  return v;
}

inline Matrix random_density(Rng& rng, Eigen::Index d) {
  Matrix x(d, d);
  for (Eigen::Index j = 0; j < d; ++j) x.col(j) = random_complex_vector(rng, d);
  Matrix rho = x * x.adjoint();
  return rho / rho.trace();
}

// Random channel with d^2 Kraus operators from a Haar isometry.
inline std::vector<Matrix> random_full_rank_channel(Rng& rng, int d) {
  const int K = d * d;
  const Matrix u = random_unitary(rng, K * d);
  std::vector<Matrix> out;
  for (int k = 0; k < K; ++k) out.push_back(u.block(k * d, 0, d, d));
  return out;
}

inline double choi_distance(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  return (choi(KrausSet(a)) - choi(KrausSet(b))).norm();
}

// Unitary permutation sending the singlet from the last basis slot to slot 0.
inline Matrix move_last_to_front(int d) {
  Matrix p = Matrix::Zero(d, d);
  p(0, d - 1) = 1.0;
  for (int i = 1; i < d; ++i) p(i, i - 1) = 1.0;
  return p;
}

}  // namespace gcec::testing
