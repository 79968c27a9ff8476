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

#include <string>
#include <vector>

#include "gcec/group_catalog.hpp"

namespace gcec {

// Direct sum of irreps. Parts are irrep indices sorted by (dim, index).
struct RepLabel {
  std::vector<int> parts;
  int total_dim = 0;

  bool operator==(const RepLabel&) const = default;
};

// Canonicalizes `parts` against the spec and fills total_dim.
RepLabel make_label(const GroupSpec& spec, std::vector<int> parts);

// "Omega+ + Omega(2)" style name.
std::string label_name(const GroupSpec& spec, const RepLabel& label);

struct Rep {
  RepLabel label;
  std::vector<Matrix> generators;
};

std::vector<RepLabel> enumerate_reps(const GroupSpec& spec, int d);
Rep materialize(const GroupSpec& spec, const RepLabel& label);
std::vector<Irrep> omega_candidates(const GroupSpec& spec, int d);

}  // namespace gcec
