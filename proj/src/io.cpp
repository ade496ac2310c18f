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

#include "qot/io.hpp"

#include <fstream>

#include "qot/errors.hpp"

namespace qot {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("matrix: expected non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw ParseError("matrix: row is not an array");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = j[i][c];
      if (!e.is_array() || e.size() != 2)
        throw ParseError("matrix: entry is not an [re, im] pair");
      m(i, c) = cxd{e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

namespace {

void expect_type(const json& j, const char* type) {
  if (!j.is_object() || !j.contains("type") || j["type"] != type)
    throw ParseError(std::string("expected object of type '") + type + "'");
}

}  // namespace

json state_to_json(const DensityMatrix& rho) {
  return json{{"type", "density_matrix"},
              {"dim", rho.dim()},
              {"data", matrix_to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& j) {
  expect_type(j, "density_matrix");
  const Matrix m = matrix_from_json(j.at("data"));
  if (j.contains("dim") && j["dim"].get<std::size_t>() != m.rows())
    throw ParseError("density_matrix: dim field mismatches data");
  return DensityMatrix(m);
}

json observables_to_json(const ObservableTuple& t) {
  json data = json::array();
  for (const Matrix& x : t.entries()) data.push_back(matrix_to_json(x));
  return json{{"type", "observable_tuple"},
              {"dim", t.dim()},
              {"d", t.size()},
              {"data", std::move(data)}};
}

ObservableTuple observables_from_json(const json& j) {
  expect_type(j, "observable_tuple");
  const json& data = j.at("data");
  if (!data.is_array()) throw ParseError("observable_tuple: data not an array");
  std::vector<Matrix> entries;
  for (const json& e : data) entries.push_back(matrix_from_json(e));
  const std::size_t dim =
      j.contains("dim") ? j["dim"].get<std::size_t>()
                        : (entries.empty() ? 0 : entries[0].rows());
  return ObservableTuple(dim, std::move(entries));
}

json channel_to_json(const KrausChannel& ch) {
  json data = json::array();
  for (const Matrix& v : ch.kraus()) data.push_back(matrix_to_json(v));
  return json{{"type", "kraus_channel"},
              {"dim_in", ch.dim_in()},
              {"dim_out", ch.dim_out()},
              {"data", std::move(data)}};
}

KrausChannel channel_from_json(const json& j) {
  expect_type(j, "kraus_channel");
  const json& data = j.at("data");
  if (!data.is_array() || data.empty())
    throw ParseError("kraus_channel: data must be a non-empty array");
  std::vector<Matrix> kraus;
  for (const json& e : data) kraus.push_back(matrix_from_json(e));
  const std::size_t din = j.at("dim_in").get<std::size_t>();
  const std::size_t dout = j.at("dim_out").get<std::size_t>();
  return KrausChannel(din, dout, std::move(kraus));
}

json choi_to_json(const ChoiMatrix& c) {
  return json{{"type", "choi_matrix"},
              {"dim_in", c.dim_in()},
              {"dim_out", c.dim_out()},
              {"data", matrix_to_json(c.matrix())}};
}

ChoiMatrix choi_from_json(const json& j) {
  expect_type(j, "choi_matrix");
  return ChoiMatrix(j.at("dim_in").get<std::size_t>(),
                    j.at("dim_out").get<std::size_t>(),
                    matrix_from_json(j.at("data")));
}

json cost_report_to_json(const CostReport& r) {
  return json{{"type", "cost_report"},
              {"schema_version", 1},
              {"total", r.total},
              {"clamped_total", r.clamped_total()},
              {"per_operator", r.per_operator},
              {"norm_terms_x", r.norm_terms_x},
              {"norm_terms_y", r.norm_terms_y},
              {"cross_terms", r.cross_terms}};
}

namespace {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::MaxIterations:
      return "max_iterations";
    case SolveStatus::NumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

}  // namespace

json solution_to_json(const SdpSolution& s) {
  return json{{"type", "sdp_solution"},
              {"schema_version", 1},
              {"status", status_name(s.status)},
              {"optimal_cost", s.optimal_cost},
              {"divergence", s.divergence},
              {"primal_residual", s.primal_residual},
              {"dual_residual", s.dual_residual},
              {"duality_gap", s.duality_gap},
              {"iterations", s.iterations},
              {"choi", choi_to_json(s.choi)}};
}

json certificate_to_json(const CertificateReport& c) {
  return json{{"type", "certificate"},
              {"schema_version", 1},
              {"constraint_residual", c.constraint_residual},
              {"max_constraint_violation", c.max_constraint_violation},
              {"psd_margin", c.psd_margin},
              {"dual_psd_margin", c.dual_psd_margin},
              {"comp_slack", c.comp_slack},
              {"duality_gap", c.duality_gap},
              {"roundtrip_cost", c.roundtrip_cost},
              {"roundtrip_gap", c.roundtrip_gap},
              {"ok", c.ok()}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qot
