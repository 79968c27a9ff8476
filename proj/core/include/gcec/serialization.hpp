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

#include <nlohmann/json.hpp>

#include "gcec/channel_core.hpp"
#include "gcec/group_catalog.hpp"
#include "gcec/pipeline.hpp"

namespace gcec {

inline constexpr int kSchemaVersion = 1;

// Complex numbers are [re, im] pairs throughout.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KrausSet& kraus);
KrausSet kraus_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroupProps& props);
nlohmann::json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FileVerdict& verdict);

// Two-space indent, trailing newline. Doubles print as the shortest decimal
// that round-trips.
std::string dump(const nlohmann::json& j);

}  // namespace gcec
