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

#include "gcec/covariance_kernel.hpp"

#include <algorithm>

#include "gcec/error.hpp"

namespace gcec {

namespace {

struct Shape {
  int K;
  int d;
};

Shape check_shapes(std::span<const Matrix> d1, std::span<const Matrix> d2,
                   std::span<const Matrix> omega) {
  if (d1.empty() || d1.size() != d2.size() || d1.size() != omega.size())
    throw Error(ErrorCode::DimMismatch, "generator lists must be non-empty and of equal length");
  const auto d = d1.front().rows();
  const auto K = omega.front().rows();
  for (size_t i = 0; i < d1.size(); ++i) {
    if (d1[i].rows() != d || d1[i].cols() != d || d2[i].rows() != d || d2[i].cols() != d)
      throw Error(ErrorCode::DimMismatch, "D1 and D2 generators must be square of equal size");
    if (omega[i].rows() != K || omega[i].cols() != K)
      throw Error(ErrorCode::DimMismatch, "Omega generators must be square of equal size");
  }
  return {static_cast<int>(K), static_cast<int>(d)};
}

// Places `block` on every diagonal slot of a K-fold direct sum and subtracts
// Omega (x) 1_{d^2}.
Matrix assemble(const Matrix& block, const Matrix& omega, int K, int d) {
  const int dd = d * d;
  Matrix out = -kron(omega, Matrix::Identity(dd, dd));
  for (int k = 0; k < K; ++k) out.block(k * dd, k * dd, dd, dd) += block;
  return out;
}

}  // namespace

CovarianceSystem build_discrete_system(std::span<const Matrix> d1, std::span<const Matrix> d2,
                                       std::span<const Matrix> omega) {
  const auto [K, d] = check_shapes(d1, d2, omega);
  CovarianceSystem sys{{}, K, d};
  for (size_t i = 0; i < d1.size(); ++i)
    sys.matrices.push_back(assemble(kron(d2[i].adjoint(), d1[i].transpose()), omega[i], K, d));
  return sys;
}

CovarianceSystem build_lie_system(std::span<const Matrix> d1, std::span<const Matrix> d2,
                                  std::span<const Matrix> omega) {
  const auto [K, d] = check_shapes(d1, d2, omega);
  const Matrix id = Matrix::Identity(d, d);
  CovarianceSystem sys{{}, K, d};
  for (size_t i = 0; i < d1.size(); ++i)
    sys.matrices.push_back(
        assemble(kron(id, d1[i].transpose()) - kron(d2[i], id), omega[i], K, d));
  return sys;
}

CovarianceSystem build_system(GroupKind kind, const Rep& d1, const Rep& d2, const Irrep& omega) {
  if (kind == GroupKind::lie) return build_lie_system(d1.generators, d2.generators, omega.generators);
  return build_discrete_system(d1.generators, d2.generators, omega.generators);
}

KernelFamily joint_nullspace(const CovarianceSystem& sys, double tol_kernel) {
  const Eigen::Index n = static_cast<Eigen::Index>(sys.K) * sys.d * sys.d;
  Matrix stacked(n * static_cast<Eigen::Index>(sys.matrices.size()), n);
  for (size_t i = 0; i < sys.matrices.size(); ++i) {
    if (sys.matrices[i].rows() != n || sys.matrices[i].cols() != n)
      throw Error(ErrorCode::DimMismatch, "covariance block has the wrong size");
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = sys.matrices[i];
  }
  KernelFamily family;
  family.basis = nullspace(stacked, tol_kernel);
  family.K = sys.K;
  family.d = sys.d;
  return family;
}

std::vector<Matrix> vec_to_kraus(const Vector& v, int K, int d) {
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  if (K < 1 || d < 1 || v.size() != K * dd)
    throw Error(ErrorCode::LengthMismatch, "vector length " + std::to_string(v.size()) +
                                               " is not K*d^2 = " + std::to_string(K * dd));
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) out.push_back(unvec_row_major(v.segment(k * dd, dd), d, d));
  return out;
}

Vector kraus_to_vec(std::span<const Matrix> kraus) {
  if (kraus.empty()) return Vector();
  const auto dd = kraus.front().size();
  Vector v(static_cast<Eigen::Index>(kraus.size()) * dd);
  for (size_t k = 0; k < kraus.size(); ++k)
    v.segment(static_cast<Eigen::Index>(k) * dd, dd) = vec_row_major(kraus[k]);
  return v;
}

std::vector<Matrix> family_kraus(const KernelFamily& family, const Vector& c) {
  if (c.size() != family.n_params())
    throw Error(ErrorCode::LengthMismatch, "coefficient vector length does not match the family");
  return vec_to_kraus(family.basis * c, family.K, family.d);
}

double covariance_residual(GroupKind kind, std::span<const Matrix> kraus,
                           std::span<const Matrix> d1, std::span<const Matrix> d2,
                           std::span<const Matrix> omega) {
  check_shapes(d1, d2, omega);
  const auto K = static_cast<Eigen::Index>(kraus.size());
  if (omega.front().rows() != K)
    throw Error(ErrorCode::DimMismatch, "Kraus count does not match dim Omega");
  double worst = 0.0;
  for (size_t g = 0; g < d1.size(); ++g) {
    for (Eigen::Index k = 0; k < K; ++k) {
      Matrix lhs = kind == GroupKind::lie
                       ? Matrix(kraus[k] * d1[g] - d2[g] * kraus[k])
                       : Matrix(d2[g].adjoint() * kraus[k] * d1[g]);
      for (Eigen::Index l = 0; l < K; ++l) lhs -= omega[g](k, l) * kraus[l];
      worst = std::max(worst, lhs.norm());
    }
  }
  return worst;
}

}  // namespace gcec
