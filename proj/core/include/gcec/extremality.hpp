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
#include <string_view>
#include <vector>

#include "gcec/channel_builder.hpp"
#include "gcec/channel_core.hpp"

namespace gcec {

enum class VerdictReason {
  independent,        // rank = K^2
  dependent_products, // rank < K^2 with K <= d: quasi-extreme
  too_many_kraus,     // minimal K > d: not generalized-extreme
};

std::string_view to_string(VerdictReason reason);

struct ExtremalityVerdict {
  bool is_extreme = false;
  int rank = 0;
  int expected_rank = 0;      // K^2 of the minimal Kraus set
  int kraus_count = 0;        // K of the minimal Kraus set
  double min_singular_value = 0.0;  // K^2-th singular value over the largest
  VerdictReason reason = VerdictReason::independent;
};

// Linear independence of {A_k^dag A_l} after reducing the input to a
// minimal Kraus set. Throws NotTracePreserving when ||Xi - 1||_F > tol_tp.
ExtremalityVerdict test_extreme(const KrausSet& kraus, double tol_rank = 1e-8, double tol_tp = 1e-8);

struct SweepOptions {
  int grid_size = 64;
  double tol_rank = 1e-8;
  std::uint64_t seed = 0;
  int max_refinements = 4;
  int refine_iterations = 4000;
};

struct SweepPoint {
  Vector coefficients;
  ExtremalityVerdict verdict;
};

struct SweepResult {
  std::vector<SweepPoint> grid;
  // Refined points whose rank drop survives re-verification at a tenth of
  // tol_rank; each is also appended to `grid`.
  std::vector<SweepPoint> rank_drop_points;
};

SweepResult sweep_family(const TpManifold& manifold, const SweepOptions& options = {});

}  // namespace gcec
