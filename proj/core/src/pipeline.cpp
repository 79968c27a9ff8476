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

#include "gcec/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "gcec/covariance_kernel.hpp"
#include "gcec/error.hpp"
#include "gcec/serialization.hpp"

namespace gcec {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class E>
E parse_enum(std::string_view text, std::initializer_list<E> values, const char* what) {
  for (E v : values)
    if (to_string(v) == text) return v;
  throw Error(ErrorCode::SchemaError, std::string("unknown ") + what + " '" + std::string(text) + "'");
}

std::string format_double(std::optional<double> v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", *v);
  return buf;
}

FileVerdict verdict_for(const KrausSet& k, std::string source, double tol_rank, double tol_tp) {
  FileVerdict v;
  v.source = std::move(source);
  v.d = k.d();
  v.K = k.K();
  v.tp_residual = k.tp_residual();
  v.min_choi_eigenvalue = min_choi_eigenvalue(k);
  if (v.min_choi_eigenvalue < -1e-10) {
    v.classification = "invalid";
    v.diagnostic = "Choi matrix is not positive semidefinite";
    return v;
  }
  if (v.tp_residual > tol_tp) {
    v.classification = "invalid";
    v.diagnostic = "NotTracePreserving: residual " + format_double(v.tp_residual);
    return v;
  }
  v.valid = true;
  v.verdict = test_extreme(k, tol_rank, tol_tp);
  v.unitary = v.verdict->kraus_count == 1;
  switch (v.verdict->reason) {
    case VerdictReason::independent: v.classification = "extreme"; break;
    case VerdictReason::dependent_products: v.classification = "quasi_extreme"; break;
    case VerdictReason::too_many_kraus: v.classification = "not_generalized_extreme"; break;
  }
  return v;
}

}  // namespace

std::string_view to_string(ChannelStatus status) {
  switch (status) {
    case ChannelStatus::no_cp_map: return "no_cp_map";
    case ChannelStatus::no_tp_solution: return "no_tp_solution";
    case ChannelStatus::solver_failed: return "solver_failed";
    case ChannelStatus::channel_found: return "channel_found";
  }
  return "unknown";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::extreme: return "extreme";
    case Classification::quasi_extreme: return "quasi_extreme";
    case Classification::unitary: return "unitary";
    case Classification::not_applicable: return "not_applicable";
  }
  return "unknown";
}

std::string_view to_string(ReportFormat f) { return f == ReportFormat::json ? "json" : "text"; }

ChannelStatus channel_status_from_string(std::string_view text) {
  return parse_enum(text, {ChannelStatus::no_cp_map, ChannelStatus::no_tp_solution,
                           ChannelStatus::solver_failed, ChannelStatus::channel_found},
                    "status");
}

Classification classification_from_string(std::string_view text) {
  return parse_enum(text, {Classification::extreme, Classification::quasi_extreme,
                           Classification::unitary, Classification::not_applicable},
                    "classification");
}

TpPath tp_path_from_string(std::string_view text) {
  return parse_enum(text, {TpPath::empty_family, TpPath::certificate, TpPath::linear, TpPath::nonlinear},
                    "tp_path");
}

ReportFormat report_format_from_string(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "text") return ReportFormat::text;
  throw Error(ErrorCode::InvalidArgument, "format must be 'json' or 'text'");
}

ChannelRecord solve_instance(const GroupSpec& spec, const RepLabel& d1_label, const RepLabel& d2_label,
                             int omega_index, const RunOptions& options, std::uint64_t seed) {
  const Irrep& omega = spec.irrep(omega_index);
  ChannelRecord rec;
  rec.group = spec.name;
  rec.d = d1_label.total_dim;
  rec.d1 = {d1_label, label_name(spec, d1_label)};
  rec.d2 = {d2_label, label_name(spec, d2_label)};
  rec.omega_index = omega_index;
  rec.omega_label = omega.label;

  const Rep d1 = materialize(spec, d1_label);
  const Rep d2 = materialize(spec, d2_label);
  KernelFamily family = joint_nullspace(build_system(spec.kind, d1, d2, omega), options.tol.kernel);
  family.labels = InstanceLabel{d1_label, d2_label, omega_index};
  rec.n_params = family.n_params();
  if (family.n_params() == 0) {
    rec.status = ChannelStatus::no_cp_map;
    rec.note = "only the zero Kraus family is covariant";
    return rec;
  }

  TpOptions tp_opts;
  tp_opts.tol_tp = options.tol.tp;
  tp_opts.n_starts = options.n_starts;
  tp_opts.seed = seed;
  tp_opts.max_solutions = options.max_samples;
  tp_opts.time_budget_s = options.time_budget_s;
  const TpSolveReport tp = solve_tp(family, tp_opts);
  rec.tp_path = tp.path;
  rec.xi_diagonal = tp.xi_diagonal;
  rec.moduli_constraints = tp.moduli_constraints;
  rec.note = tp.note;
  if (tp.status == TpStatus::no_solution) {
    rec.status = ChannelStatus::no_tp_solution;
    return rec;
  }
  if (tp.status == TpStatus::solver_failed) {
    rec.status = ChannelStatus::solver_failed;
    return rec;
  }

  rec.status = ChannelStatus::channel_found;
  double cov = 0.0, tpr = 0.0, sigma = INFINITY;
  bool all_extreme = true;
  for (const auto& c : tp.solutions) {
    KrausSet k = kraus_at(family, c);
    cov = std::max(cov, covariance_residual(spec.kind, k.ops(), d1.generators, d2.generators, omega.generators));
    tpr = std::max(tpr, k.tp_residual());
    const ExtremalityVerdict v = test_extreme(k, options.tol.rank);
    sigma = std::min(sigma, v.min_singular_value);
    all_extreme = all_extreme && v.is_extreme;
    rec.kraus_samples.push_back(std::move(k));
  }
  rec.residuals = {cov, tpr, sigma};
  if (family.K == 1)
    rec.classification = Classification::unitary;
  else
    rec.classification = all_extreme ? Classification::extreme : Classification::quasi_extreme;

  if (options.sweep_grid > 0 && family.K > 1) {
    const TpManifold manifold(family, tp, tp_opts);
    SweepOptions sw;
    sw.grid_size = options.sweep_grid;
    sw.tol_rank = options.tol.rank;
    sw.seed = seed;
    const SweepResult sweep = sweep_family(manifold, sw);
    for (const auto& p : sweep.rank_drop_points) rec.rank_drop_samples.push_back(kraus_at(family, p.coefficients));
  }
  return rec;
}

RunManifest run_enumeration(std::string_view group, std::optional<GroupKind> kind, int d,
                            const RunOptions& options) {
  const GroupKind k = kind ? *kind : catalog_kind(group);
  const GroupProps p = props(group, k, d);
  const GroupSpec& spec = p.spec;
  const auto reps = enumerate_reps(spec, d);
  std::vector<int> omegas;
  for (const auto& ir : omega_candidates(spec, d))
    if (!options.nonunitary_only || ir.dim > 1) omegas.push_back(ir.index);

  struct Task {
    size_t d1, d2;
    int omega;
  };
  std::vector<Task> tasks;
  for (int om : omegas)
    for (size_t a = 0; a < reps.size(); ++a)
      for (size_t b = 0; b < reps.size(); ++b) tasks.push_back({a, b, om});

  std::vector<std::optional<ChannelRecord>> results(tasks.size());
  auto run_one = [&](size_t i) {
    const Task& t = tasks[i];
    try {
      results[i] = solve_instance(spec, reps[t.d1], reps[t.d2], t.omega, options, mix_seed(options.seed, i));
    } catch (const std::exception& e) {
      ChannelRecord rec;
      rec.group = spec.name;
      rec.d = d;
      rec.d1 = {reps[t.d1], label_name(spec, reps[t.d1])};
      rec.d2 = {reps[t.d2], label_name(spec, reps[t.d2])};
      rec.omega_index = t.omega;
      rec.omega_label = spec.irrep(t.omega).label;
      rec.status = ChannelStatus::solver_failed;
      rec.note = std::string("error: ") + e.what();
      results[i] = std::move(rec);
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (size_t i = next++; i < tasks.size(); i = next++) run_one(i);
      });
    for (auto& th : pool) th.join();
  }

  RunManifest m;
  m.group = spec.name;
  m.kind = k;
  m.d = d;
  m.tol = options.tol;
  m.seed = options.seed;
  m.n_starts = options.n_starts;
  m.nonunitary_only = options.nonunitary_only;
  m.time_budget_s = options.time_budget_s;
  m.max_samples = options.max_samples;
  m.sweep_grid = options.sweep_grid;
  m.total_instances = static_cast<long long>(tasks.size());
  for (auto& r : results) {
    if (r->status == ChannelStatus::channel_found) ++m.count_found;
    m.records.push_back(std::move(*r));
  }
  return m;
}

std::vector<FileVerdict> classify_text(std::string_view json_text, double tol_rank, double tol_tp) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  std::vector<FileVerdict> out;
  if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      out.push_back(verdict_for(kraus_from_json(j[i]), "[" + std::to_string(i) + "]", tol_rank, tol_tp));
    return out;
  }
  if (j.is_object() && j.contains("records")) {
    const RunManifest m = manifest_from_json(j);
    const GroupSpec spec = props(m.group, m.kind, m.d).spec;
    for (size_t r = 0; r < m.records.size(); ++r) {
      const ChannelRecord& rec = m.records[r];
      if (rec.kraus_samples.empty()) continue;
      const Rep d1 = materialize(spec, rec.d1.label);
      const Rep d2 = materialize(spec, rec.d2.label);
      const Irrep& om = spec.irrep(rec.omega_index);
      for (size_t s = 0; s < rec.kraus_samples.size(); ++s) {
        const KrausSet& k = rec.kraus_samples[s];
        FileVerdict v = verdict_for(k, "records[" + std::to_string(r) + "].kraus_samples[" + std::to_string(s) + "]",
                                    tol_rank, tol_tp);
        v.covariance_residual = covariance_residual(spec.kind, k.ops(), d1.generators, d2.generators, om.generators);
        if (*v.covariance_residual > 1e-9) {
          v.valid = false;
          v.classification = "invalid";
          v.diagnostic = "covariance residual " + format_double(v.covariance_residual);
        }
        out.push_back(std::move(v));
      }
    }
    return out;
  }
  if (j.is_object()) {
    out.push_back(verdict_for(kraus_from_json(j), "kraus", tol_rank, tol_tp));
    return out;
  }
  throw Error(ErrorCode::SchemaError, "expected a Kraus set, an array of Kraus sets, or a run manifest");
}

std::vector<FileVerdict> classify_file(const std::filesystem::path& path, double tol_rank, double tol_tp) {
  return classify_text(read_text_file(path), tol_rank, tol_tp);
}

std::string report(const RunManifest& m, ReportFormat format) {
  if (format == ReportFormat::json) return dump(to_json(m));
  std::ostringstream os;
  os << "group " << m.group << " (" << to_string(m.kind) << "), d = " << m.d << ", seed " << m.seed << "\n";
  os << "instances " << m.total_instances << ", channels found " << m.count_found << "\n\n";
  char line[512];
  std::snprintf(line, sizeof line, "%4s  %-28s %-28s %-12s %3s  %-15s %-14s %-10s %-10s %-10s\n", "#", "D1", "D2",
                "Omega", "n", "status", "class", "cov", "tp", "sigma_min");
  os << line;
  for (size_t i = 0; i < m.records.size(); ++i) {
    const auto& r = m.records[i];
    std::snprintf(line, sizeof line, "%4zu  %-28s %-28s %-12s %3d  %-15s %-14s %-10s %-10s %-10s\n", i,
                  r.d1.name.c_str(), r.d2.name.c_str(), r.omega_label.c_str(), r.n_params,
                  std::string(to_string(r.status)).c_str(), std::string(to_string(r.classification)).c_str(),
                  format_double(r.residuals.covariance).c_str(), format_double(r.residuals.tp).c_str(),
                  format_double(r.residuals.rank_sigma_min).c_str());
    os << line;
    for (const auto& eq : r.moduli_constraints) os << "        " << eq << "\n";
  }
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gcec
