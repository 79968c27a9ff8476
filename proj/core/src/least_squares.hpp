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

#include <functional>

#include "gcec/linalg.hpp"

namespace gcec::detail {

struct LeastSquaresProblem {
  int n_params = 0;
  int n_residuals = 0;
  std::function<void(const RealVector& x, RealVector& r)> residual;
  std::function<void(const RealVector& x, RealMatrix& jac)> jacobian;
};

// Levenberg-Marquardt from x0; returns the final iterate.
RealVector minimize_least_squares(const LeastSquaresProblem& problem, RealVector x0,
                                  int max_evaluations = 400);

// min ||W x - b|| subject to x >= 0 (Lawson-Hanson active set).
RealVector nonnegative_least_squares(const RealMatrix& w, const RealVector& b);

}  // namespace gcec::detail
