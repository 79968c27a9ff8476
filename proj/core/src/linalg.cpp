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

#include "gcec/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace gcec {

Vector vec_row_major(const Matrix& a) {
  Vector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

Matrix unvec_row_major(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  Matrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = v(i * cols + j);
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  Eigen::Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix out = Matrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

namespace {

int rank_from(const RealVector& sigma, double rel_tol) {
  if (sigma.size() == 0) return 0;
  const double smax = sigma(0);
  if (!(smax > 1e-300)) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > rel_tol * smax) ++r;
  return r;
}

}  // namespace

Matrix nullspace(const Matrix& m, double rel_tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Matrix::Identity(n, n);
  RealVector sigma;
  Matrix v;
  if (n <= 32) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    sigma = svd.singularValues();
    v = svd.matrixV();
  } else {
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
    sigma = svd.singularValues();
    v = svd.matrixV();
  }
  const int r = rank_from(sigma, rel_tol);
  return v.rightCols(n - r);
}

Matrix column_span(const Matrix& m, double rel_tol) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix(m.rows(), 0);
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const int r = rank_from(svd.singularValues(), rel_tol);
  return svd.matrixU().leftCols(r);
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  if (m.cols() <= 32 && m.rows() <= 32) return Eigen::JacobiSVD<Matrix>(m).singularValues();
  return Eigen::BDCSVD<Matrix>(m).singularValues();
}

int numerical_rank(const RealVector& sigma, double rel_tol) { return rank_from(sigma, rel_tol); }

double subspace_distance(const Matrix& a, const Matrix& b) {
  auto projector = [](const Matrix& x) -> Matrix {
    if (x.cols() == 0) return Matrix::Zero(x.rows(), x.rows());
    const Matrix q = column_span(x, 1e-12);
    return q * q.adjoint();
  };
  const Matrix diff = projector(a) - projector(b);
  if (diff.size() == 0) return 0.0;
  return singular_values(diff)(0);
}

double unitarity_error(const Matrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

double hermiticity_error(const Matrix& h) {
  if (h.rows() != h.cols()) return INFINITY;
  return (h - h.adjoint()).norm();
}

Vector random_complex_vector(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

Matrix random_unitary(Rng& rng, Eigen::Index n) {
  Matrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) z.col(j) = random_complex_vector(rng, n);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Haar measure needs the phases of R's diagonal folded back into Q.
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Vector fix_phase_gauge(const Vector& c, double eps) {
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double mag = std::abs(c(i));
    if (mag > eps) return c * (std::conj(c(i)) / mag);
  }
  return c;
}

}  // namespace gcec
