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

#include <optional>
#include <span>
#include <vector>

#include "gcec/group_catalog.hpp"
#include "gcec/rep_enumerator.hpp"

namespace gcec {

struct CovarianceSystem {
  std::vector<Matrix> matrices;  // one (K d^2) x (K d^2) block per generator
  int K = 0;
  int d = 0;
};

struct InstanceLabel {
  RepLabel d1;
  RepLabel d2;
  int omega = 0;
};

// Parametric CP family: Kraus vector = basis * c for complex coefficients c.
struct KernelFamily {
  Matrix basis;  // (K d^2) x n_params, orthonormal columns
  int K = 0;
  int d = 0;
  std::optional<InstanceLabel> labels;

  int n_params() const { return static_cast<int>(basis.cols()); }
};

// Discrete groups: D2^dag(g) A_k D1(g) = sum_l Omega_kl(g) A_l.
CovarianceSystem build_discrete_system(std::span<const Matrix> d1, std::span<const Matrix> d2,
                                       std::span<const Matrix> omega);

// Lie algebras: A_k D1(T) - D2(T) A_k = sum_l Omega_kl(T) A_l, which is the
// linearization of the discrete relation at g = exp(i eps T).
CovarianceSystem build_lie_system(std::span<const Matrix> d1, std::span<const Matrix> d2,
                                  std::span<const Matrix> omega);

CovarianceSystem build_system(GroupKind kind, const Rep& d1, const Rep& d2, const Irrep& omega);

KernelFamily joint_nullspace(const CovarianceSystem& sys, double tol_kernel = 1e-10);

std::vector<Matrix> vec_to_kraus(const Vector& v, int K, int d);
Vector kraus_to_vec(std::span<const Matrix> kraus);

// Kraus operators of the family member with coefficients c.
std::vector<Matrix> family_kraus(const KernelFamily& family, const Vector& c);

// Largest Frobenius residual of the covariance relation over all generators
// and Kraus indices.
double covariance_residual(GroupKind kind, std::span<const Matrix> kraus,
                           std::span<const Matrix> d1, std::span<const Matrix> d2,
                           std::span<const Matrix> omega);

}  // namespace gcec
