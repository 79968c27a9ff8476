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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gcec/error.hpp"
#include "gcec/group_catalog.hpp"
#include "gcec/pipeline.hpp"
#include "gcec/rep_enumerator.hpp"
#include "gcec/serialization.hpp"

namespace {

struct Common {
  std::string group;
  std::string kind;
  int dim = 0;
  std::string out;
  std::string format = "json";
};

std::optional<gcec::GroupKind> parse_kind(const std::string& kind) {
  if (kind.empty()) return std::nullopt;
  return gcec::group_kind_from_string(kind);
}

gcec::GroupKind resolve_kind(const Common& c) {
  const auto k = parse_kind(c.kind);
  return k ? *k : gcec::catalog_kind(c.group);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    gcec::write_text_file(c.out, text);
}

void add_group_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--group", c.group, "Group name (Z2, Zn, S3, A4, D5, Dn, SO3, SU2)")->required();
  cmd->add_option("--kind", c.kind, "discrete or lie (defaults to the catalog kind)")
      ->check(CLI::IsMember({"discrete", "lie"}));
  cmd->add_option("--dim", c.dim, "Hilbert-space dimension")->required();
}

void add_output_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
  cmd->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

int cmd_catalog(const Common& c) {
  const auto p = gcec::props(c.group, resolve_kind(c), c.dim);
  if (c.format == "json") {
    emit(c, gcec::dump(gcec::to_json(p)));
    return 0;
  }
  std::string s = p.spec.name + " (" + std::string(gcec::to_string(p.spec.kind)) + "), d = " +
                  std::to_string(c.dim) + "\n";
  s += "generators " + std::to_string(p.num_generators) + ", irreps " + std::to_string(p.num_irreps) +
       ", reps " + std::to_string(p.num_reps) + "\n";
  for (const auto& ir : p.spec.irreps)
    s += "  [" + std::to_string(ir.index) + "] " + ir.label + "  dim " + std::to_string(ir.dim) + "\n";
  emit(c, s);
  return 0;
}

int cmd_enumerate(const Common& c) {
  const auto p = gcec::props(c.group, resolve_kind(c), c.dim);
  const auto reps = gcec::enumerate_reps(p.spec, c.dim);
  const auto omegas = gcec::omega_candidates(p.spec, c.dim);
  if (c.format == "json") {
    nlohmann::json j;
    j["schema_version"] = gcec::kSchemaVersion;
    j["group"] = p.spec.name;
    j["d"] = c.dim;
    j["reps"] = nlohmann::json::array();
    for (const auto& r : reps)
      j["reps"].push_back({{"parts", r.parts}, {"dim", r.total_dim}, {"name", gcec::label_name(p.spec, r)}});
    j["omega_candidates"] = nlohmann::json::array();
    for (const auto& o : omegas) j["omega_candidates"].push_back({{"index", o.index}, {"dim", o.dim}, {"label", o.label}});
    emit(c, gcec::dump(j));
    return 0;
  }
  std::string s = std::to_string(reps.size()) + " representations of dimension " + std::to_string(c.dim) + "\n";
  for (const auto& r : reps) s += "  " + gcec::label_name(p.spec, r) + "\n";
  s += std::to_string(omegas.size()) + " Omega candidates\n";
  for (const auto& o : omegas) s += "  " + o.label + "\n";
  emit(c, s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-covariant generalized-extreme quantum channels"};
  app.require_subcommand(1);

  Common common;
  gcec::RunOptions run;
  std::string in_path;
  double tol_rank_classify = 1e-8;
  double tol_tp_classify = 1e-8;

  auto* catalog = app.add_subcommand("catalog", "Dump a group's irreps up to the given dimension");
  add_group_options(catalog, common);
  add_output_options(catalog, common);

  auto* enumerate = app.add_subcommand("enumerate", "List representation labels and Omega candidates");
  add_group_options(enumerate, common);
  add_output_options(enumerate, common);

  auto* run_cmd = app.add_subcommand("run", "Construct and classify all covariant channels");
  add_group_options(run_cmd, common);
  add_output_options(run_cmd, common);
  run_cmd->add_option("--tol-kernel", run.tol.kernel, "Relative singular-value cutoff for kernels");
  run_cmd->add_option("--tol-tp", run.tol.tp, "Trace-preservation residual tolerance");
  run_cmd->add_option("--tol-rank", run.tol.rank, "Relative rank cutoff for extremality");
  run_cmd->add_option("--starts", run.n_starts, "Nonlinear solver starting points")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run.seed, "PRNG seed");
  run_cmd->add_flag("--nonunitary-only", run.nonunitary_only, "Skip one-dimensional Omega labels");
  run_cmd->add_option("--time-budget", run.time_budget_s, "Per-instance TP solve budget in seconds");
  run_cmd->add_option("--samples", run.max_samples, "Kraus samples kept per channel family")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--sweep-grid", run.sweep_grid, "Extremality sweep grid size (0 disables)");
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Validate and classify Kraus sets from a JSON file");
  classify->add_option("--in", in_path, "Kraus set, array of Kraus sets, or run manifest")->required();
  classify->add_option("--tol-rank", tol_rank_classify, "Relative rank cutoff");
  classify->add_option("--tol-tp", tol_tp_classify, "Trace-preservation tolerance");
  add_output_options(classify, common);

  auto* report_cmd = app.add_subcommand("report", "Render a saved run manifest");
  report_cmd->add_option("--in", in_path, "Run manifest JSON")->required();
  add_output_options(report_cmd, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) return cmd_catalog(common);
    if (enumerate->parsed()) return cmd_enumerate(common);
    if (run_cmd->parsed()) {
      const auto m = gcec::run_enumeration(common.group, parse_kind(common.kind), common.dim, run);
      emit(common, gcec::report(m, gcec::report_format_from_string(common.format)));
      return 0;
    }
    if (classify->parsed()) {
      const auto verdicts = gcec::classify_file(in_path, tol_rank_classify, tol_tp_classify);
      if (common.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : verdicts) arr.push_back(gcec::to_json(v));
        emit(common, gcec::dump(arr));
      } else {
        std::string s;
        for (const auto& v : verdicts) {
          char line[256];
          std::snprintf(line, sizeof line, "%-40s d=%d K=%d %s%s tp=%.2e%s%s\n", v.source.c_str(), v.d, v.K,
                        v.classification.c_str(), v.unitary ? " (unitary)" : "", v.tp_residual,
                        v.diagnostic.empty() ? "" : "  ", v.diagnostic.c_str());
          s += line;
        }
        emit(common, s);
      }
      return 0;
    }
    if (report_cmd->parsed()) {
      const auto j = nlohmann::json::parse(gcec::read_text_file(in_path));
      const auto m = gcec::manifest_from_json(j);
      emit(common, gcec::report(m, gcec::report_format_from_string(common.format)));
      return 0;
    }
  } catch (const gcec::Error& e) {
    std::cerr << "gcec: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gcec: SchemaError: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
