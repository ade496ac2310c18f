// Copyright 2026 The qotkit Authors
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

#include "json.hpp"
#include "qot/channel.hpp"
#include "qot/cost.hpp"
#include "qot/sdp.hpp"

// Instance file schema (language-neutral, diff-friendly):
//   complex scalars as [re, im] pairs, matrices as nested row arrays,
//   top level {"type": "...", "dim"/"dim_in"/"dim_out": ..., "data": ...}.
// Types: "density_matrix", "observable", "observable_tuple",
//        "kraus_channel", "choi_matrix".

namespace qot {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

nlohmann::json observables_to_json(const ObservableTuple& t);
ObservableTuple observables_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json choi_to_json(const ChoiMatrix& j);
ChoiMatrix choi_from_json(const nlohmann::json& j);

nlohmann::json cost_report_to_json(const CostReport& r);
nlohmann::json solution_to_json(const SdpSolution& s);
nlohmann::json certificate_to_json(const CertificateReport& c);

// Throws ParseError on unreadable files or malformed JSON.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace qot
