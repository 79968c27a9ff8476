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

#include "least_squares.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/NonLinearOptimization>

namespace gcec::detail {

namespace {

// MINPACK needs at least as many residuals as parameters; extra rows are
// zero and do not move the minimizer.
struct Adapter {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = RealVector;
  using ValueType = RealVector;
  using JacobianType = RealMatrix;

  const LeastSquaresProblem* problem;
  int rows;

  int inputs() const { return problem->n_params; }
  int values() const { return rows; }

  int operator()(const RealVector& x, RealVector& fvec) const {
    RealVector r(problem->n_residuals);
    problem->residual(x, r);
    fvec.setZero(rows);
    fvec.head(problem->n_residuals) = r;
    return 0;
  }

  int df(const RealVector& x, RealMatrix& fjac) const {
    RealMatrix j(problem->n_residuals, problem->n_params);
    problem->jacobian(x, j);
    fjac.setZero(rows, problem->n_params);
    fjac.topRows(problem->n_residuals) = j;
    return 0;
  }
};

}  // namespace

RealVector minimize_least_squares(const LeastSquaresProblem& problem, RealVector x0,
                                  int max_evaluations) {
  Adapter adapter{&problem, std::max(problem.n_residuals, problem.n_params)};
  Eigen::LevenbergMarquardt<Adapter> lm(adapter);
  lm.parameters.maxfev = max_evaluations;
  lm.parameters.ftol = 1e-15;
  lm.parameters.xtol = 1e-15;
  lm.parameters.gtol = 0.0;
  lm.minimize(x0);
  return x0;
}

RealVector nonnegative_least_squares(const RealMatrix& w, const RealVector& b) {
  const Eigen::Index n = w.cols();
  RealVector x = RealVector::Zero(n);
  std::vector<bool> passive(static_cast<size_t>(n), false);
  const double tol = 1e-12 * std::max(1.0, w.cwiseAbs().maxCoeff()) * static_cast<double>(n + 1);

  auto solve_passive = [&]() {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < n; ++j)
      if (passive[static_cast<size_t>(j)]) idx.push_back(j);
    RealMatrix sub(w.rows(), static_cast<Eigen::Index>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = w.col(idx[k]);
    const RealVector zs = sub.completeOrthogonalDecomposition().solve(b);
    RealVector z = RealVector::Zero(n);
    for (size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zs(static_cast<Eigen::Index>(k));
    return z;
  };

  for (int outer = 0; outer < 3 * static_cast<int>(n) + 10; ++outer) {
    const RealVector grad = w.transpose() * (b - w * x);
    Eigen::Index best = -1;
    double best_val = tol;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!passive[static_cast<size_t>(j)] && grad(j) > best_val) {
        best_val = grad(j);
        best = j;
      }
    if (best < 0) break;
    passive[static_cast<size_t>(best)] = true;

    for (int inner = 0; inner < static_cast<int>(n) + 5; ++inner) {
      const RealVector z = solve_passive();
      bool feasible = true;
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<size_t>(j)] && z(j) <= 0) feasible = false;
      if (feasible) {
        x = z;
        break;
      }
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<size_t>(j)] && z(j) <= 0 && x(j) - z(j) > 0)
          alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      if (!std::isfinite(alpha)) alpha = 0.0;
      x += alpha * (z - x);
      for (Eigen::Index j = 0; j < n; ++j)
        if (passive[static_cast<size_t>(j)] && std::abs(x(j)) <= tol) {
          passive[static_cast<size_t>(j)] = false;
          x(j) = 0.0;
        }
    }
  }
  return x.cwiseMax(0.0);
}

}  // namespace gcec::detail
