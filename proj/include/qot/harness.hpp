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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qot/rng.hpp"
#include "qot/sdp.hpp"

namespace qot {

struct QuadratureParams {
  double truncation = 4.0;
  std::size_t panels = 64;
  std::size_t order = 8;
};

// One config drives one sweep. Every sample i derives its own RNG stream
// from (seed, i), so a record is reproducible from (config, sample index)
// alone and results do not depend on the parallelism degree.
struct ExperimentConfig {
  std::string kind;            // integral-check | subadd-sweep | triangle-sweep | selfdist | gen
  std::size_t dim = 2;
  std::size_t d = 1;           // cost tuple length for the random family
  std::string costs = "pauli"; // pauli | random | <path to observable_tuple file>
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double tol = 0.0;            // 0 → kind default
  QuadratureParams quad;
  SolverParams solver;
  std::size_t jobs = 1;
  std::string out;             // output file or directory (gen); empty → stdout summary only
  std::string format = "json"; // json | csv

  double effective_tol() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);

// Flat numeric record with a fixed field order per experiment kind: the
// field names double as CSV columns. Reproducible from (config, index);
// duration_ms is the one timing field and is excluded from reproducibility
// comparisons.
struct ExperimentRecord {
  std::size_t index = 0;
  std::vector<std::pair<std::string, double>> values;
  bool pass = true;
  bool warned = false;  // non-Optimal solver status: excluded from pass/fail
  double duration_ms = 0.0;
};

struct SweepSummary {
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t warnings = 0;
  double max_metric = 0.0;  // kind-specific: max gap / max violation / −min slack / max W
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<ExperimentRecord> records;
  SweepSummary summary;
};

SweepResult run_integral_check(const ExperimentConfig& config);
SweepResult run_subadd_sweep(const ExperimentConfig& config);
SweepResult run_triangle_sweep(const ExperimentConfig& config);
SweepResult run_selfdist(const ExperimentConfig& config);

// Emits one marginal-consistent instance file set per sample into
// config.out: rho_<i>.json, sigma_<i>.json, channel_<i>.json,
// observables_<i>.json.
void run_gen(const ExperimentConfig& config);

nlohmann::json sweep_to_json(const SweepResult& r);
std::string sweep_to_csv(const SweepResult& r);

// Writes to config.out in config.format (no-op when out is empty).
void write_sweep_output(const SweepResult& r);

// Cost tuple for a sweep sample: the pauli family (dim 2), a fresh random
// tuple from the sample stream, or a tuple loaded from file.
ObservableTuple sample_cost_tuple(const ExperimentConfig& config,
                                  std::size_t dim, Rng& rng);

}  // namespace qot
