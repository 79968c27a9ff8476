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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcec/linalg.hpp"

namespace gcec {

enum class GroupKind { discrete, lie };
enum class LieAlgebra { so3, su2 };

std::string_view to_string(GroupKind kind);
GroupKind group_kind_from_string(std::string_view text);

struct Irrep {
  int index = 0;
  int dim = 0;
  // Discrete groups: one unitary per generator. Lie algebras: {L+, L-, Lz}.
  std::vector<Matrix> generators;
  std::string label;
};

// A word in the generators (indices into the generator list) that must
// evaluate to the identity in every representation.
struct Relation {
  std::vector<int> word;
  std::string text;
};

struct GroupSpec {
  std::string name;
  GroupKind kind = GroupKind::discrete;
  int num_generators = 0;
  std::vector<std::string> generator_names;
  std::vector<Irrep> irreps;
  std::vector<Relation> relations;
  std::optional<int> order;

  const Irrep& irrep(int index) const;
  // Copy keeping only irreps of dimension at most `max_dim`. Indices keep
  // their catalog values.
  GroupSpec restricted(int max_dim) const;
};

struct GroupProps {
  GroupSpec spec;
  int num_irreps = 0;
  long long num_reps = 0;
  int num_generators = 0;
  std::vector<int> irrep_dims;
};

// Builds the catalog entry. Lie algebras carry irreps up to `max_dim`;
// finite groups carry all of theirs.
using GroupFactory = std::function<GroupSpec(int max_dim)>;

// Adds or replaces a catalog entry. Call before concurrent use.
void register_group(const std::string& name, GroupKind kind, GroupFactory factory);

std::vector<std::string> catalog_names();
GroupKind catalog_kind(std::string_view name);
GroupSpec lookup(std::string_view name, int max_dim);

GroupProps props(std::string_view name, GroupKind kind, int hilbert_dim);

Irrep lie_irrep(LieAlgebra algebra, int dim);

// Number of multisets of the given part sizes (with multiplicity per
// distinct irrep) summing to `total`.
long long count_multisets(const std::vector<int>& dims, int total);

// Largest deviation from the defining relations (discrete) or the
// commutation relations (Lie) over the supplied generator matrices.
double relation_residual(const GroupSpec& spec, std::span<const Matrix> generators);

}  // namespace gcec
