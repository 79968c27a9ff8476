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

#include "gcec/rep_enumerator.hpp"

#include <algorithm>

#include "gcec/error.hpp"

namespace gcec {

namespace {

std::vector<const Irrep*> sorted_irreps(const GroupSpec& spec, int max_dim) {
  std::vector<const Irrep*> out;
  for (const auto& ir : spec.irreps)
    if (ir.dim <= max_dim) out.push_back(&ir);
  std::sort(out.begin(), out.end(), [](const Irrep* a, const Irrep* b) {
    return std::pair(a->dim, a->index) < std::pair(b->dim, b->index);
  });
  return out;
}

void extend(const std::vector<const Irrep*>& irreps, size_t first, int remaining,
            std::vector<int>& parts, int total, std::vector<RepLabel>& out) {
  if (remaining == 0) {
    out.push_back(RepLabel{parts, total});
    return;
  }
  for (size_t i = first; i < irreps.size(); ++i) {
    if (irreps[i]->dim > remaining) continue;
    parts.push_back(irreps[i]->index);
    extend(irreps, i, remaining - irreps[i]->dim, parts, total, out);
    parts.pop_back();
  }
}

}  // namespace

RepLabel make_label(const GroupSpec& spec, std::vector<int> parts) {
  int total = 0;
  for (int p : parts) total += spec.irrep(p).dim;
  std::sort(parts.begin(), parts.end(), [&](int a, int b) {
    return std::pair(spec.irrep(a).dim, a) < std::pair(spec.irrep(b).dim, b);
  });
  return RepLabel{std::move(parts), total};
}

std::string label_name(const GroupSpec& spec, const RepLabel& label) {
  std::string out;
  for (size_t i = 0; i < label.parts.size(); ++i) {
    if (i > 0) out += " + ";
    out += spec.irrep(label.parts[i]).label;
  }
  return out;
}

std::vector<RepLabel> enumerate_reps(const GroupSpec& spec, int d) {
  if (d < 1) throw Error(ErrorCode::DimensionZero, "Hilbert-space dimension must be >= 1");
  std::vector<RepLabel> out;
  std::vector<int> parts;
  extend(sorted_irreps(spec, d), 0, d, parts, d, out);
  return out;
}

Rep materialize(const GroupSpec& spec, const RepLabel& label) {
  if (label.parts.empty()) throw Error(ErrorCode::UnknownIrrepIndex, "empty representation label");
  std::vector<const Irrep*> blocks;
  int total = 0;
  for (int p : label.parts) {
    blocks.push_back(&spec.irrep(p));
    total += blocks.back()->dim;
  }
  if (total != label.total_dim)
    throw Error(ErrorCode::DimMismatch, "label dimension does not match its parts");
  Rep rep;
  rep.label = label;
  for (int g = 0; g < spec.num_generators; ++g) {
    std::vector<Matrix> diag;
    for (const Irrep* ir : blocks) diag.push_back(ir->generators[static_cast<size_t>(g)]);
    rep.generators.push_back(block_diagonal(diag));
  }
  return rep;
}

std::vector<Irrep> omega_candidates(const GroupSpec& spec, int d) {
  if (d < 1) throw Error(ErrorCode::DimensionZero, "Hilbert-space dimension must be >= 1");
  std::vector<Irrep> out;
  for (const auto& ir : spec.irreps)
    if (ir.dim <= d) out.push_back(ir);
  return out;
}

}  // namespace gcec
