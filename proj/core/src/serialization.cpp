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

#include "gcec/serialization.hpp"

#include "gcec/error.hpp"

namespace gcec {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    schema_error(std::string("field '") + key + "': " + e.what());
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<double>(j, key);
}

json label_to_json(const NamedLabel& l) {
  return json{{"parts", l.label.parts}, {"dim", l.label.total_dim}, {"name", l.name}};
}

NamedLabel label_from_json(const json& j) {
  NamedLabel l;
  l.label.parts = get<std::vector<int>>(j, "parts");
  l.label.total_dim = get<int>(j, "dim");
  l.name = j.contains("name") ? get<std::string>(j, "name") : std::string();
  return l;
}

json kraus_list(const std::vector<KrausSet>& sets) {
  json arr = json::array();
  for (const auto& k : sets) arr.push_back(to_json(k));
  return arr;
}

std::vector<KrausSet> kraus_list_from(const json& j, const char* key) {
  std::vector<KrausSet> out;
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array()) schema_error(std::string("field '") + key + "' must be an array");
  for (const auto& k : arr) out.push_back(kraus_from_json(k));
  return out;
}

json record_to_json(const ChannelRecord& r) {
  return json{
      {"group", r.group},
      {"d", r.d},
      {"d1_label", label_to_json(r.d1)},
      {"d2_label", label_to_json(r.d2)},
      {"omega_index", r.omega_index},
      {"omega_label", r.omega_label},
      {"n_params", r.n_params},
      {"status", std::string(to_string(r.status))},
      {"tp_path", std::string(to_string(r.tp_path))},
      {"xi_diagonal", r.xi_diagonal},
      {"kraus_samples", kraus_list(r.kraus_samples)},
      {"moduli_constraints", r.moduli_constraints},
      {"classification", std::string(to_string(r.classification))},
      {"residuals",
       json{{"covariance", optional_number(r.residuals.covariance)},
            {"tp", optional_number(r.residuals.tp)},
            {"rank_sigma_min", optional_number(r.residuals.rank_sigma_min)}}},
      {"rank_drop_samples", kraus_list(r.rank_drop_samples)},
      {"note", r.note},
  };
}

ChannelRecord record_from_json(const json& j) {
  ChannelRecord r;
  r.group = get<std::string>(j, "group");
  r.d = get<int>(j, "d");
  r.d1 = label_from_json(field(j, "d1_label"));
  r.d2 = label_from_json(field(j, "d2_label"));
  r.omega_index = get<int>(j, "omega_index");
  r.omega_label = j.contains("omega_label") ? get<std::string>(j, "omega_label") : std::string();
  r.n_params = get<int>(j, "n_params");
  r.status = channel_status_from_string(get<std::string>(j, "status"));
  r.tp_path = j.contains("tp_path") ? tp_path_from_string(get<std::string>(j, "tp_path")) : TpPath::empty_family;
  r.xi_diagonal = j.contains("xi_diagonal") && get<bool>(j, "xi_diagonal");
  r.kraus_samples = kraus_list_from(j, "kraus_samples");
  if (j.contains("moduli_constraints")) r.moduli_constraints = get<std::vector<std::string>>(j, "moduli_constraints");
  r.classification = classification_from_string(get<std::string>(j, "classification"));
  if (j.contains("residuals")) {
    const json& res = j.at("residuals");
    r.residuals.covariance = optional_from(res, "covariance");
    r.residuals.tp = optional_from(res, "tp");
    r.residuals.rank_sigma_min = optional_from(res, "rank_sigma_min");
  }
  r.rank_drop_samples = kraus_list_from(j, "rank_drop_samples");
  if (j.contains("note")) r.note = get<std::string>(j, "note");
  return r;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) schema_error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j.front().is_array()) schema_error("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) schema_error("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& z = row[static_cast<size_t>(k)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        schema_error("complex entries must be [re, im] number pairs");
      m(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

json to_json(const KrausSet& kraus) {
  json mats = json::array();
  for (const auto& a : kraus.ops()) mats.push_back(matrix_to_json(a));
  return json{{"schema_version", kSchemaVersion}, {"d", kraus.d()}, {"K", kraus.K()}, {"kraus", mats}};
}

KrausSet kraus_from_json(const json& j) {
  if (!j.is_object()) schema_error("Kraus set must be a JSON object");
  const int d = get<int>(j, "d");
  const int K = get<int>(j, "K");
  const json& mats = field(j, "kraus");
  if (!mats.is_array() || static_cast<int>(mats.size()) != K) schema_error("'kraus' must hold K matrices");
  std::vector<Matrix> ops;
  for (const auto& m : mats) {
    ops.push_back(matrix_from_json(m));
    if (ops.back().rows() != d || ops.back().cols() != d) schema_error("Kraus matrix is not d x d");
  }
  try {
    return KrausSet(std::move(ops));
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

json to_json(const GroupProps& props) {
  json irreps = json::array();
  for (const auto& ir : props.spec.irreps) {
    json gens = json::array();
    for (const auto& g : ir.generators) gens.push_back(matrix_to_json(g));
    irreps.push_back(json{{"index", ir.index}, {"dim", ir.dim}, {"label", ir.label}, {"generators", gens}});
  }
  json relations = json::array();
  for (const auto& r : props.spec.relations) relations.push_back(r.text);
  json out{{"schema_version", kSchemaVersion},
           {"name", props.spec.name},
           {"kind", std::string(to_string(props.spec.kind))},
           {"num_generators", props.num_generators},
           {"generator_names", props.spec.generator_names},
           {"num_irreps", props.num_irreps},
           {"num_reps", props.num_reps},
           {"irrep_dims", props.irrep_dims},
           {"relations", relations},
           {"irreps", irreps}};
  out["order"] = props.spec.order ? json(*props.spec.order) : json(nullptr);
  return out;
}

json to_json(const RunManifest& m) {
  json records = json::array();
  for (const auto& r : m.records) records.push_back(record_to_json(r));
  return json{
      {"schema_version", m.schema_version},
      {"group", m.group},
      {"kind", std::string(to_string(m.kind))},
      {"d", m.d},
      {"tolerances", json{{"kernel", m.tol.kernel}, {"tp", m.tol.tp}, {"rank", m.tol.rank}}},
      {"seed", m.seed},
      {"options", json{{"n_starts", m.n_starts},
                       {"nonunitary_only", m.nonunitary_only},
                       {"time_budget_s", m.time_budget_s},
                       {"max_samples", m.max_samples},
                       {"sweep_grid", m.sweep_grid}}},
      {"total_instances", m.total_instances},
      {"count_found", m.count_found},
      {"records", records},
  };
}

RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  m.schema_version = get<int>(j, "schema_version");
  if (m.schema_version != kSchemaVersion)
    schema_error("unsupported schema_version " + std::to_string(m.schema_version));
  m.group = get<std::string>(j, "group");
  m.kind = group_kind_from_string(get<std::string>(j, "kind"));
  m.d = get<int>(j, "d");
  const json& tol = field(j, "tolerances");
  m.tol.kernel = get<double>(tol, "kernel");
  m.tol.tp = get<double>(tol, "tp");
  m.tol.rank = get<double>(tol, "rank");
  m.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("options")) {
    const json& o = j.at("options");
    m.n_starts = get<int>(o, "n_starts");
    m.nonunitary_only = get<bool>(o, "nonunitary_only");
    m.time_budget_s = get<double>(o, "time_budget_s");
    m.max_samples = get<int>(o, "max_samples");
    m.sweep_grid = get<int>(o, "sweep_grid");
  }
  m.total_instances = get<long long>(j, "total_instances");
  m.count_found = get<int>(j, "count_found");
  const json& records = field(j, "records");
  if (!records.is_array()) schema_error("'records' must be an array");
  for (const auto& r : records) m.records.push_back(record_from_json(r));
  return m;
}

json to_json(const FileVerdict& v) {
  json out{{"source", v.source},
           {"d", v.d},
           {"K", v.K},
           {"tp_residual", v.tp_residual},
           {"min_choi_eigenvalue", v.min_choi_eigenvalue},
           {"covariance_residual", optional_number(v.covariance_residual)},
           {"valid", v.valid},
           {"classification", v.classification},
           {"unitary", v.unitary},
           {"diagnostic", v.diagnostic}};
  if (v.verdict) {
    out["verdict"] = json{{"is_extreme", v.verdict->is_extreme},
                          {"rank", v.verdict->rank},
                          {"expected_rank", v.verdict->expected_rank},
                          {"kraus_count", v.verdict->kraus_count},
                          {"min_singular_value", v.verdict->min_singular_value},
                          {"reason", std::string(to_string(v.verdict->reason))}};
  } else {
    out["verdict"] = nullptr;
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gcec
