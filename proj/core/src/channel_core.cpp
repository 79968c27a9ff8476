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

#include "gcec/channel_core.hpp"

#include <cmath>

#include "gcec/error.hpp"

namespace gcec {

KrausSet::KrausSet(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw Error(ErrorCode::InvalidKraus, "a Kraus set needs at least one operator");
  const auto d = ops_.front().rows();
  if (d < 1) throw Error(ErrorCode::InvalidKraus, "Kraus operators must be at least 1x1");
  bool nonzero = false;
  for (const auto& a : ops_) {
    if (a.rows() != d || a.cols() != d)
      throw Error(ErrorCode::InvalidKraus, "Kraus operators must be square and of equal size");
    if (!a.allFinite()) throw Error(ErrorCode::InvalidKraus, "Kraus operator has non-finite entries");
    nonzero = nonzero || a.norm() > 0.0;
  }
  if (!nonzero) throw Error(ErrorCode::InvalidKraus, "all Kraus operators are zero");
}

Matrix KrausSet::xi() const {
  Matrix x = Matrix::Zero(d(), d());
  for (const auto& a : ops_) x.noalias() += a.adjoint() * a;
  return x;
}

double KrausSet::tp_residual() const { return (xi() - Matrix::Identity(d(), d())).norm(); }

bool is_density_matrix(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) return false;
  if (hermiticity_error(rho) > tol) return false;
  if (std::abs(rho.trace() - Complex(1.0)) > tol) return false;
  const Matrix h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix::DensityMatrix(Matrix rho, double tol) : rho_(std::move(rho)) {
  if (!is_density_matrix(rho_, tol))
    throw Error(ErrorCode::InvalidState, "matrix is not a density matrix within tolerance");
}

Matrix apply(const KrausSet& kraus, const Matrix& rho) {
  if (rho.rows() != kraus.d() || rho.cols() != kraus.d())
    throw Error(ErrorCode::DimMismatch, "state dimension does not match the channel");
  Matrix out = Matrix::Zero(kraus.d(), kraus.d());
  for (const auto& a : kraus.ops()) out.noalias() += a * rho * a.adjoint();
  return out;
}

DensityMatrix apply(const KrausSet& kraus, const DensityMatrix& rho) {
  return DensityMatrix(apply(kraus, rho.matrix()), 1e-9);
}

Matrix choi(const KrausSet& kraus) {
  const int d = kraus.d();
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  // (A (x) 1)|Psi> has entries A(m, n) / sqrt(d) at index m*d + n.
  Matrix cols(dd, kraus.K());
  for (int k = 0; k < kraus.K(); ++k) cols.col(k) = vec_row_major(kraus[k]);
  return (cols * cols.adjoint()) / (static_cast<double>(d) * d);
}

int choi_rank(const KrausSet& kraus, double tol) {
  const Matrix c = choi(kraus);
  Eigen::SelfAdjointEigenSolver<Matrix> es(c, Eigen::EigenvaluesOnly);
  const RealVector ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  if (!(top > 0)) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > tol * top) ++r;
  return r;
}

double min_choi_eigenvalue(const KrausSet& kraus) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(choi(kraus), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

KrausSet minimal_kraus(const KrausSet& kraus, double tol) {
  const int d = kraus.d();
  const Matrix c = choi(kraus) * (static_cast<double>(d) * d);
  Eigen::SelfAdjointEigenSolver<Matrix> es(c);
  const RealVector ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  std::vector<Matrix> ops;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (!(ev(i) > tol * top)) continue;
    ops.push_back(unvec_row_major(es.eigenvectors().col(i) * std::sqrt(ev(i)), d, d));
  }
  return KrausSet(std::move(ops));
}

KrausSet conjugate(const KrausSet& kraus, const Matrix& u, const Matrix& v, double tol) {
  if (u.rows() != kraus.d() || v.rows() != kraus.d())
    throw Error(ErrorCode::DimMismatch, "conjugating unitaries must match the channel dimension");
  if (unitarity_error(u) > tol || unitarity_error(v) > tol)
    throw Error(ErrorCode::NotUnitary, "conjugating matrices must be unitary");
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(kraus.K()));
  for (const auto& a : kraus.ops()) ops.push_back(u * a * v);
  return KrausSet(std::move(ops));
}

}  // namespace gcec
