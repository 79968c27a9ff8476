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

#include <vector>

#include "gcec/linalg.hpp"

namespace gcec {

// K >= 1 square matrices of equal size, not all zero.
class KrausSet {
 public:
  explicit KrausSet(std::vector<Matrix> ops);

  int d() const { return static_cast<int>(ops_.front().rows()); }
  int K() const { return static_cast<int>(ops_.size()); }
  const std::vector<Matrix>& ops() const { return ops_; }
  const Matrix& operator[](int k) const { return ops_[static_cast<size_t>(k)]; }

  // Xi = sum_k A_k^dag A_k.
  Matrix xi() const;
  // ||Xi - 1||_F.
  double tp_residual() const;

 private:
  std::vector<Matrix> ops_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix rho, double tol = 1e-12);

  int d() const { return static_cast<int>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }

 private:
  Matrix rho_;
};

// Hermitian part and positivity/trace checks at `tol`.
bool is_density_matrix(const Matrix& rho, double tol);

// sum_k A_k rho A_k^dag. The output tolerance is loose enough for channels
// that are TP to 1e-10.
DensityMatrix apply(const KrausSet& kraus, const DensityMatrix& rho);
Matrix apply(const KrausSet& kraus, const Matrix& rho);

// (1/d) (Phi (x) 1)(|Psi><Psi|), |Psi> = sum_i |i,i> / sqrt(d).
Matrix choi(const KrausSet& kraus);
int choi_rank(const KrausSet& kraus, double tol = 1e-8);
double min_choi_eigenvalue(const KrausSet& kraus);

// Minimal Kraus set from the Choi eigenvectors with eigenvalue above
// tol times the largest.
KrausSet minimal_kraus(const KrausSet& kraus, double tol = 1e-8);

// {U A_k V}.
KrausSet conjugate(const KrausSet& kraus, const Matrix& u, const Matrix& v, double tol = 1e-12);

}  // namespace gcec
