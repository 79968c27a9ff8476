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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcec/channel_builder.hpp"
#include "gcec/channel_core.hpp"
#include "gcec/extremality.hpp"
#include "gcec/group_catalog.hpp"
#include "gcec/rep_enumerator.hpp"

namespace gcec {

enum class ChannelStatus { no_cp_map, no_tp_solution, solver_failed, channel_found };
enum class Classification { extreme, quasi_extreme, unitary, not_applicable };
enum class ReportFormat { json, text };

std::string_view to_string(ChannelStatus status);
std::string_view to_string(Classification c);
ChannelStatus channel_status_from_string(std::string_view text);
Classification classification_from_string(std::string_view text);
TpPath tp_path_from_string(std::string_view text);
std::string_view to_string(ReportFormat f);
ReportFormat report_format_from_string(std::string_view text);

struct Tolerances {
  double kernel = 1e-10;
  double tp = 1e-10;
  double rank = 1e-8;
};

struct RunOptions {
  Tolerances tol;
  int n_starts = 64;
  std::uint64_t seed = 0;
  bool nonunitary_only = false;
  double time_budget_s = 10.0;
  int max_samples = 4;
  int sweep_grid = 0;  // 0 disables the per-instance extremality sweep
  int jobs = 1;        // worker threads; does not affect the output
};

struct Residuals {
  std::optional<double> covariance;
  std::optional<double> tp;
  std::optional<double> rank_sigma_min;
};

struct NamedLabel {
  RepLabel label;
  std::string name;
};

struct ChannelRecord {
  std::string group;
  int d = 0;
  NamedLabel d1;
  NamedLabel d2;
  int omega_index = 0;
  std::string omega_label;
  int n_params = 0;
  ChannelStatus status = ChannelStatus::no_cp_map;
  TpPath tp_path = TpPath::empty_family;
  bool xi_diagonal = false;
  std::vector<KrausSet> kraus_samples;
  std::vector<std::string> moduli_constraints;
  Classification classification = Classification::not_applicable;
  Residuals residuals;
  std::vector<KrausSet> rank_drop_samples;
  std::string note;
};

struct RunManifest {
  int schema_version = 1;
  std::string group;
  GroupKind kind = GroupKind::discrete;
  int d = 0;
  Tolerances tol;
  std::uint64_t seed = 0;
  int n_starts = 0;
  bool nonunitary_only = false;
  double time_budget_s = 0.0;
  int max_samples = 0;
  int sweep_grid = 0;
  long long total_instances = 0;
  int count_found = 0;
  std::vector<ChannelRecord> records;
};

// Runs every (D1, D2, Omega) instance. `kind` defaults to the catalog kind.
RunManifest run_enumeration(std::string_view group, std::optional<GroupKind> kind, int d,
                            const RunOptions& options = {});

// Solves one instance with the same steps as run_enumeration.
ChannelRecord solve_instance(const GroupSpec& spec, const RepLabel& d1, const RepLabel& d2,
                             int omega_index, const RunOptions& options, std::uint64_t seed);

struct FileVerdict {
  std::string source;
  int d = 0;
  int K = 0;
  double tp_residual = 0.0;
  double min_choi_eigenvalue = 0.0;
  std::optional<double> covariance_residual;
  bool valid = false;
  std::optional<ExtremalityVerdict> verdict;
  // extreme, quasi_extreme, not_generalized_extreme or invalid
  std::string classification;
  bool unitary = false;
  std::string diagnostic;
};

// Accepts a single KrausSet object, an array of them, or a RunManifest.
std::vector<FileVerdict> classify_file(const std::filesystem::path& path, double tol_rank = 1e-8,
                                       double tol_tp = 1e-8);
std::vector<FileVerdict> classify_text(std::string_view json_text, double tol_rank = 1e-8,
                                       double tol_tp = 1e-8);

std::string report(const RunManifest& manifest, ReportFormat format);
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace gcec
