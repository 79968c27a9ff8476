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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gcec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Row-major vectorization: v[i*cols + j] = A(i, j).
Vector vec_row_major(const Matrix& a);
Matrix unvec_row_major(const Vector& v, Eigen::Index rows, Eigen::Index cols);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);

// Orthonormal basis of the numerical kernel of `m`. A singular value counts
// as zero when it is at most rel_tol times the largest one.
Matrix nullspace(const Matrix& m, double rel_tol);

// Orthonormal basis of the column span, same thresholding rule.
Matrix column_span(const Matrix& m, double rel_tol);

RealVector singular_values(const Matrix& m);
int numerical_rank(const RealVector& sigma, double rel_tol);

// Spectral-norm distance between the orthogonal projectors onto two spans.
double subspace_distance(const Matrix& a, const Matrix& b);

double unitarity_error(const Matrix& u);
double hermiticity_error(const Matrix& h);

Matrix random_unitary(Rng& rng, Eigen::Index n);
Vector random_complex_vector(Rng& rng, Eigen::Index n);

// Multiplies by a global phase so the first entry with modulus above `eps`
// becomes real and positive.
Vector fix_phase_gauge(const Vector& c, double eps = 1e-12);

}  // namespace gcec
