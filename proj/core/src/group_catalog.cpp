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

#include "gcec/group_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "gcec/error.hpp"

namespace gcec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Matrix scalar(Complex z) {
  Matrix m(1, 1);
  m(0, 0) = z;
  return m;
}

Complex root_of_unity(int k, int n) { return std::polar(1.0, kTwoPi * k / n); }

Irrep make_irrep(int index, std::string label, std::vector<Matrix> generators) {
  Irrep irrep;
  irrep.index = index;
  irrep.dim = static_cast<int>(generators.front().rows());
  irrep.generators = std::move(generators);
  irrep.label = std::move(label);
  return irrep;
}

GroupSpec cyclic_group(int n) {
  GroupSpec g;
  g.name = "Z" + std::to_string(n);
  g.kind = GroupKind::discrete;
  g.num_generators = 1;
  g.generator_names = {"g"};
  g.order = n;
  g.relations.push_back({std::vector<int>(n, 0), "g^" + std::to_string(n)});
  for (int k = 0; k < n; ++k) {
    std::string label;
    if (n == 2)
      label = k == 0 ? "Omega+" : "Omega-";
    else
      label = "Omega_" + std::to_string(k);
    g.irreps.push_back(make_irrep(k, label, {scalar(root_of_unity(k, n))}));
  }
  return g;
}

Matrix rotation(double angle) {
  Matrix r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

GroupSpec dihedral_group(int n) {
  GroupSpec g;
  g.name = "D" + std::to_string(n);
  g.kind = GroupKind::discrete;
  g.num_generators = 2;
  g.generator_names = {"g1", "g2"};
  g.order = 2 * n;
  g.relations.push_back({{0, 0}, "g1^2"});
  g.relations.push_back({std::vector<int>(n, 1), "g2^" + std::to_string(n)});
  g.relations.push_back({{0, 1, 0, 1}, "(g1 g2)^2"});

  int index = 0;
  g.irreps.push_back(make_irrep(index++, "Omega+", {scalar(1.0), scalar(1.0)}));
  g.irreps.push_back(make_irrep(index++, "Omega-", {scalar(-1.0), scalar(1.0)}));
  if (n % 2 == 0) {
    g.irreps.push_back(make_irrep(index++, "Omega(+,-)", {scalar(1.0), scalar(-1.0)}));
    g.irreps.push_back(make_irrep(index++, "Omega(-,-)", {scalar(-1.0), scalar(-1.0)}));
  }
  Matrix reflection(2, 2);
  reflection << 1.0, 0.0, 0.0, -1.0;
  for (int k = 1; 2 * k < n; ++k) {
    std::string label;
    if (n == 5)
      label = k == 1 ? "Omega+(2)" : "Omega-(2)";
    else
      label = "Omega(2," + std::to_string(k) + ")";
    g.irreps.push_back(make_irrep(index++, label, {reflection, rotation(kTwoPi * k / n)}));
  }
  return g;
}

GroupSpec symmetric_group_3() {
  GroupSpec g;
  g.name = "S3";
  g.kind = GroupKind::discrete;
  g.num_generators = 2;
  g.generator_names = {"s1", "s2"};
  g.order = 6;
  g.relations.push_back({{0, 0}, "s1^2"});
  g.relations.push_back({{1, 1}, "s2^2"});
  g.relations.push_back({{0, 1, 0, 1, 0, 1}, "(s1 s2)^3"});
  g.irreps.push_back(make_irrep(0, "Omega+", {scalar(1.0), scalar(1.0)}));
  g.irreps.push_back(make_irrep(1, "Omega-", {scalar(-1.0), scalar(-1.0)}));
  Matrix s1(2, 2), s2(2, 2);
  const double r3 = std::sqrt(3.0);
  s1 << 1.0, 0.0, 0.0, -1.0;
  s2 << -0.5, 0.5 * r3, 0.5 * r3, 0.5;
  g.irreps.push_back(make_irrep(2, "Omega(2)", {s1, s2}));
  return g;
}

GroupSpec alternating_group_4() {
  GroupSpec g;
  g.name = "A4";
  g.kind = GroupKind::discrete;
  g.num_generators = 2;
  g.generator_names = {"g1", "g2"};
  g.order = 12;
  g.relations.push_back({{0, 0, 0}, "g1^3"});
  g.relations.push_back({{1, 1, 1}, "g2^3"});
  g.relations.push_back({{0, 1, 0, 1}, "(g1 g2)^2"});
  const char* labels[] = {"Omega+", "Omega0", "Omega-"};
  for (int k = 0; k < 3; ++k)
    g.irreps.push_back(
        make_irrep(k, labels[k], {scalar(root_of_unity(k, 3)), scalar(root_of_unity(-k, 3))}));
  const Complex w = root_of_unity(1, 3);
  const Complex w2 = w * w;
  Matrix g1 = Matrix::Zero(3, 3);
  g1.diagonal() << 1.0, w, w2;
  Matrix g2(3, 3);
  g2 << 1.0, -2.0 * w2, 2.0 * w, -2.0, w2, 2.0 * w, 2.0, 2.0 * w2, w;
  g2 *= -1.0 / 3.0;
  g.irreps.push_back(make_irrep(3, "Omega(3)", {g1, g2}));
  return g;
}

GroupSpec lie_group(LieAlgebra algebra, int max_dim) {
  GroupSpec g;
  g.name = algebra == LieAlgebra::so3 ? "SO3" : "SU2";
  g.kind = GroupKind::lie;
  g.num_generators = 3;
  g.generator_names = {"L+", "L-", "Lz"};
  const int step = algebra == LieAlgebra::so3 ? 2 : 1;
  for (int dim = 1, index = 0; dim <= max_dim; dim += step, ++index) {
    Irrep irrep = lie_irrep(algebra, dim);
    irrep.index = index;
    g.irreps.push_back(std::move(irrep));
  }
  return g;
}

struct Entry {
  GroupKind kind;
  GroupFactory factory;
};

struct Registry {
  std::mutex mutex;
  std::map<std::string, Entry, std::less<>> entries;

  Registry() {
    entries["Z2"] = {GroupKind::discrete, [](int) { return cyclic_group(2); }};
    entries["S3"] = {GroupKind::discrete, [](int) { return symmetric_group_3(); }};
    entries["A4"] = {GroupKind::discrete, [](int) { return alternating_group_4(); }};
    entries["D5"] = {GroupKind::discrete, [](int) { return dihedral_group(5); }};
    entries["SO3"] = {GroupKind::lie, [](int m) { return lie_group(LieAlgebra::so3, m); }};
    entries["SU2"] = {GroupKind::lie, [](int m) { return lie_group(LieAlgebra::su2, m); }};
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

// Zn (n >= 1) and Dn (n >= 3) beyond the registered names.
std::optional<Entry> parametric_entry(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  const char head = name.front();
  if (head != 'Z' && head != 'D') return std::nullopt;
  int n = 0;
  const auto tail = name.substr(1);
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.front() == '0')
    return std::nullopt;
  if (head == 'Z' && n >= 1) return Entry{GroupKind::discrete, [n](int) { return cyclic_group(n); }};
  if (head == 'D' && n >= 3) return Entry{GroupKind::discrete, [n](int) { return dihedral_group(n); }};
  return std::nullopt;
}

Entry find_entry(std::string_view name) {
  {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    if (auto it = r.entries.find(name); it != r.entries.end()) return it->second;
  }
  if (auto e = parametric_entry(name)) return *e;
  throw Error(ErrorCode::UnknownGroup, "group '" + std::string(name) + "' is not in the catalog");
}

Matrix evaluate_word(std::span<const Matrix> generators, const std::vector<int>& word) {
  const auto n = generators.front().rows();
  Matrix out = Matrix::Identity(n, n);
  for (int g : word) out = out * generators[static_cast<size_t>(g)];
  return out;
}

}  // namespace

std::string_view to_string(GroupKind kind) { return kind == GroupKind::lie ? "lie" : "discrete"; }

GroupKind group_kind_from_string(std::string_view text) {
  if (text == "lie") return GroupKind::lie;
  if (text == "discrete") return GroupKind::discrete;
  throw Error(ErrorCode::InvalidArgument, "group kind must be 'discrete' or 'lie', got '" +
                                              std::string(text) + "'");
}

const Irrep& GroupSpec::irrep(int index) const {
  for (const auto& ir : irreps)
    if (ir.index == index) return ir;
  throw Error(ErrorCode::UnknownIrrepIndex,
              "irrep index " + std::to_string(index) + " not present in " + name);
}

GroupSpec GroupSpec::restricted(int max_dim) const {
  GroupSpec out = *this;
  std::erase_if(out.irreps, [max_dim](const Irrep& ir) { return ir.dim > max_dim; });
  return out;
}

void register_group(const std::string& name, GroupKind kind, GroupFactory factory) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.entries[name] = {kind, std::move(factory)};
}

std::vector<std::string> catalog_names() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> names;
  for (const auto& [name, entry] : r.entries) names.push_back(name);
  return names;
}

GroupKind catalog_kind(std::string_view name) { return find_entry(name).kind; }

GroupSpec lookup(std::string_view name, int max_dim) {
  if (max_dim < 1) throw Error(ErrorCode::DimensionZero, "Hilbert-space dimension must be >= 1");
  return find_entry(name).factory(max_dim);
}

long long count_multisets(const std::vector<int>& dims, int total) {
  if (total < 0) return 0;
  std::vector<long long> ways(static_cast<size_t>(total) + 1, 0);
  ways[0] = 1;
  for (int d : dims) {
    if (d < 1) continue;
    for (int s = d; s <= total; ++s) ways[static_cast<size_t>(s)] += ways[static_cast<size_t>(s - d)];
  }
  return ways[static_cast<size_t>(total)];
}

GroupProps props(std::string_view name, GroupKind kind, int hilbert_dim) {
  if (hilbert_dim < 1) throw Error(ErrorCode::DimensionZero, "Hilbert-space dimension must be >= 1");
  const Entry entry = find_entry(name);
  if (entry.kind != kind)
    throw Error(ErrorCode::UnknownGroup, "group '" + std::string(name) + "' is " +
                                             std::string(to_string(entry.kind)) + ", not " +
                                             std::string(to_string(kind)));
  GroupProps p;
  p.spec = entry.factory(hilbert_dim).restricted(hilbert_dim);
  p.num_irreps = static_cast<int>(p.spec.irreps.size());
  p.num_generators = p.spec.num_generators;
  for (const auto& ir : p.spec.irreps) p.irrep_dims.push_back(ir.dim);
  p.num_reps = count_multisets(p.irrep_dims, hilbert_dim);
  return p;
}

Irrep lie_irrep(LieAlgebra algebra, int dim) {
  if (dim < 1) throw Error(ErrorCode::DimensionZero, "irrep dimension must be >= 1");
  if (algebra == LieAlgebra::so3 && dim % 2 == 0)
    throw Error(ErrorCode::ParityError, "so(3) irreps have odd dimension, got " + std::to_string(dim));
  const double l = 0.5 * (dim - 1);
  Matrix lz = Matrix::Zero(dim, dim);
  Matrix lp = Matrix::Zero(dim, dim);
  // Basis index i carries weight m = l - i.
  for (int i = 0; i < dim; ++i) {
    const double m = l - i;
    lz(i, i) = m;
    if (i > 0) lp(i - 1, i) = std::sqrt(l * (l + 1) - m * (m + 1));
  }
  Irrep irrep;
  irrep.index = algebra == LieAlgebra::so3 ? (dim - 1) / 2 : dim - 1;
  irrep.dim = dim;
  irrep.generators = {lp, lp.adjoint(), lz};
  irrep.label = "Omega(" + std::to_string(dim) + ")";
  return irrep;
}

double relation_residual(const GroupSpec& spec, std::span<const Matrix> generators) {
  if (generators.size() != static_cast<size_t>(spec.num_generators))
    throw Error(ErrorCode::DimMismatch, "generator count does not match " + spec.name);
  double worst = 0.0;
  if (spec.kind == GroupKind::discrete) {
    const auto n = generators.front().rows();
    const Matrix id = Matrix::Identity(n, n);
    for (const auto& rel : spec.relations)
      worst = std::max(worst, (evaluate_word(generators, rel.word) - id).norm());
    for (const auto& g : generators) worst = std::max(worst, unitarity_error(g));
    return worst;
  }
  const Matrix& lp = generators[0];
  const Matrix& lm = generators[1];
  const Matrix& lz = generators[2];
  worst = std::max(worst, (lz * lp - lp * lz - lp).norm());
  worst = std::max(worst, (lz * lm - lm * lz + lm).norm());
  worst = std::max(worst, (lp * lm - lm * lp - 2.0 * lz).norm());
  worst = std::max(worst, (lp.adjoint() - lm).norm());
  worst = std::max(worst, hermiticity_error(lz));
  return worst;
}

}  // namespace gcec
