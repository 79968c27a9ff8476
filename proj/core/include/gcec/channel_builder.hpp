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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcec/channel_core.hpp"
#include "gcec/covariance_kernel.hpp"

namespace gcec {

enum class TpStatus { solved, no_solution, solver_failed };

// How the report was reached. `certificate` and `linear` can prove that no
// TP member exists; `nonlinear` cannot.
enum class TpPath { empty_family, certificate, linear, nonlinear };

std::string_view to_string(TpStatus status);
std::string_view to_string(TpPath path);

struct TpOptions {
  double tol_tp = 1e-10;
  int n_starts = 64;
  std::uint64_t seed = 0;
  int max_solutions = 4;
  double time_budget_s = 10.0;
};

// Decoupled form of a diagonal Xi: with z = rotation^dag c, the TP condition
// reads weights * |z|^2 = 1 componentwise, and phases of z are free.
struct ModuliSystem {
  Matrix rotation;             // n x n unitary
  RealMatrix weights;          // d x n, nonnegative, columns sum to 1
  RealVector particular;       // a feasible |z|^2
  RealMatrix null_directions;  // orthonormal basis of ker(weights)
};

struct TpSolveReport {
  TpStatus status = TpStatus::no_solution;
  TpPath path = TpPath::empty_family;
  bool xi_diagonal = false;
  std::vector<Vector> solutions;
  std::vector<double> residuals;
  std::vector<std::string> moduli_constraints;
  std::vector<int> free_phase;  // indices into z
  std::string note;
  std::optional<ModuliSystem> moduli;
};

// Xi(c) = sum_k A_k(c)^dag A_k(c).
Matrix xi_of(const Vector& c, const KernelFamily& family);

// True iff every off-diagonal entry of Xi vanishes identically in c.
bool diagonal_structure(const KernelFamily& family, double tol = 1e-12);

TpSolveReport solve_tp(const KernelFamily& family, const TpOptions& options = {});

KrausSet kraus_at(const KernelFamily& family, const Vector& c);

// Parameterization of the TP solutions of a family, used for sampling and
// local refinement. Linear-path families are parameterized exactly by
// (moduli offsets, phases); otherwise a raw coefficient vector is projected
// onto the TP set by a local least-squares solve.
class TpManifold {
 public:
  TpManifold(const KernelFamily& family, const TpSolveReport& report, const TpOptions& options = {});

  int dimension() const { return dimension_; }
  bool exact() const { return moduli_.has_value(); }
  std::optional<Vector> point(const RealVector& params) const;
  RealVector random_params(Rng& rng) const;
  const KernelFamily& family() const { return *family_; }

 private:
  std::optional<Vector> linear_point(const RealVector& params) const;
  RealVector sample_moduli(Rng& rng) const;

  const KernelFamily* family_;
  std::optional<ModuliSystem> moduli_;
  TpOptions options_;
  int dimension_ = 0;
};

// Projects c onto the TP set by Levenberg-Marquardt; nullopt if the final
// residual exceeds tol_tp.
std::optional<Vector> project_to_tp(const KernelFamily& family, const Vector& c, double tol_tp);

struct ChannelFit {
  Vector coefficients;
  double choi_distance = 0.0;
  double tp_residual = 0.0;
};

// Family member whose Choi matrix is closest to the reference channel,
// subject to trace preservation (penalized). Multi-start from TP samples.
ChannelFit fit_channel(const KernelFamily& family, const KrausSet& reference,
                       const TpOptions& options = {});

}  // namespace gcec
