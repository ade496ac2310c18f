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

#include "qot/harness.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "qot/errors.hpp"
#include "qot/generators.hpp"
#include "qot/integral.hpp"
#include "qot/io.hpp"

namespace qot {

using nlohmann::json;

namespace {

double kind_default_tol(const std::string& kind) {
  if (kind == "integral-check") return 1e-6;
  if (kind == "subadd-sweep") return 1e-8;
  if (kind == "triangle-sweep") return 1e-5;
  if (kind == "selfdist") return 1e-3;
  return 1e-6;
}

// Deterministic outputs regardless of worker count: sample i writes only
// slot i, and every sample owns its derived RNG stream.
template <typename F>
void parallel_for(std::size_t n, std::size_t jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min(jobs, n);
  pool.reserve(count);
  for (std::size_t j = 0; j < count; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Per-sample failures become records, not aborts: property sweeps need the
// full distribution.
template <typename Body>
ExperimentRecord guarded_sample(std::size_t index, Body&& body) {
  Timer timer;
  ExperimentRecord rec;
  rec.index = index;
  try {
    body(rec);
  } catch (const std::exception&) {
    rec.values = {{"error", 1.0}};
    rec.pass = false;
    rec.warned = false;
  }
  rec.duration_ms = timer.ms();
  return rec;
}

SweepSummary summarize(const std::vector<ExperimentRecord>& records,
                       const std::string& metric_field, bool metric_negated) {
  SweepSummary s;
  s.samples = records.size();
  bool any_metric = false;
  double worst = -std::numeric_limits<double>::infinity();
  for (const ExperimentRecord& r : records) {
    if (r.warned) ++s.warnings;
    if (r.pass)
      ++s.passed;
    else
      ++s.failed;
    if (r.warned) continue;
    for (const auto& [name, value] : r.values)
      if (name == metric_field) {
        worst = std::max(worst, metric_negated ? -value : value);
        any_metric = true;
      }
  }
  s.max_metric = any_metric ? worst : 0.0;
  return s;
}

struct GenInstance {
  KrausChannel ch;
  DensityMatrix rho;
  DensityMatrix sigma;
  std::size_t num_kraus;
  std::size_t rank_sigma;
};

// Shared generator for integral-check and gen: (ch, σ) seeded, ρ := Φ*(σ);
// ranks cycle through deficient cases.
GenInstance draw_instance(std::size_t dim, Rng& rng) {
  const std::size_t nk = rng.uniform_int(1, 2);
  const std::size_t rank = rng.uniform_int(1, dim);
  KrausChannel ch = random_channel(dim, dim, nk, rng);
  DensityMatrix sigma = random_state(dim, rank, rng);
  DensityMatrix rho = predual_apply(ch, sigma);
  return {std::move(ch), std::move(rho), std::move(sigma), nk, rank};
}

}  // namespace

double ExperimentConfig::effective_tol() const {
  return tol > 0.0 ? tol : kind_default_tol(kind);
}

ObservableTuple sample_cost_tuple(const ExperimentConfig& config,
                                  std::size_t dim, Rng& rng) {
  if (config.costs == "pauli") {
    if (dim != 2)
      throw InvalidParameters("pauli cost family requires dimension 2");
    return pauli_tuple();
  }
  if (config.costs == "random")
    return random_observable_tuple(dim, config.d, rng);
  const ObservableTuple t = observables_from_json(load_json_file(config.costs));
  if (t.dim() != dim)
    throw DimensionMismatch("cost tuple file dimension mismatches instance");
  return t;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  if (j.contains("kind")) c.kind = j["kind"].get<std::string>();
  if (j.contains("dim")) c.dim = j["dim"].get<std::size_t>();
  if (j.contains("d")) c.d = j["d"].get<std::size_t>();
  if (j.contains("costs")) c.costs = j["costs"].get<std::string>();
  if (j.contains("samples")) c.samples = j["samples"].get<std::size_t>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("tol")) c.tol = j["tol"].get<double>();
  if (j.contains("jobs")) c.jobs = j["jobs"].get<std::size_t>();
  if (j.contains("out")) c.out = j["out"].get<std::string>();
  if (j.contains("format")) c.format = j["format"].get<std::string>();
  if (j.contains("quad")) {
    const json& q = j["quad"];
    if (q.contains("T")) c.quad.truncation = q["T"].get<double>();
    if (q.contains("panels")) c.quad.panels = q["panels"].get<std::size_t>();
    if (q.contains("order")) c.quad.order = q["order"].get<std::size_t>();
  }
  if (j.contains("solver")) {
    const json& s = j["solver"];
    if (s.contains("step")) c.solver.step = s["step"].get<double>();
    if (s.contains("over_relaxation"))
      c.solver.over_relaxation = s["over_relaxation"].get<double>();
    if (s.contains("max_iter"))
      c.solver.max_iter = s["max_iter"].get<std::size_t>();
    if (s.contains("tol_primal"))
      c.solver.tol_primal = s["tol_primal"].get<double>();
    if (s.contains("tol_dual")) c.solver.tol_dual = s["tol_dual"].get<double>();
    if (s.contains("tol_gap")) c.solver.tol_gap = s["tol_gap"].get<double>();
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  return json{
      {"kind", c.kind},
      {"dim", c.dim},
      {"d", c.d},
      {"costs", c.costs},
      {"samples", c.samples},
      {"seed", c.seed},
      {"tol", c.effective_tol()},
      {"jobs", c.jobs},
      {"format", c.format},
      {"quad",
       {{"T", c.quad.truncation},
        {"panels", c.quad.panels},
        {"order", c.quad.order}}},
      {"solver",
       {{"step", c.solver.step},
        {"over_relaxation", c.solver.over_relaxation},
        {"max_iter", c.solver.max_iter},
        {"tol_primal", c.solver.tol_primal},
        {"tol_dual", c.solver.tol_dual},
        {"tol_gap", c.solver.tol_gap}}}};
}

SweepResult run_integral_check(const ExperimentConfig& config) {
  const double tol = config.effective_tol();
  const QuadratureRule rule = build_quadrature(
      config.quad.truncation, config.quad.panels, config.quad.order);

  SweepResult result;
  result.config = config;
  result.records.resize(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    result.records[i] = guarded_sample(i, [&](ExperimentRecord& rec) {
      Rng rng = Rng::stream(config.seed, i);
      const GenInstance inst = draw_instance(config.dim, rng);
      const ObservableTuple xs = sample_cost_tuple(config, config.dim, rng);
      const ObservableTuple ys = config.costs == "random"
                                     ? sample_cost_tuple(config, config.dim, rng)
                                     : xs;
      const IntegralRepReport rep =
          verify_integral_rep(inst.ch, inst.rho, inst.sigma, xs, ys, rule);
      const double rel_gap = rep.gap / (1.0 + rep.lhs);
      rec.values = {{"dim", static_cast<double>(config.dim)},
                    {"d", static_cast<double>(xs.size())},
                    {"num_kraus", static_cast<double>(inst.num_kraus)},
                    {"rank_sigma", static_cast<double>(inst.rank_sigma)},
                    {"lhs", rep.lhs},
                    {"rhs", rep.rhs},
                    {"gap", rep.gap},
                    {"rel_gap", rel_gap},
                    {"embedded_route_gap", std::abs(rep.rhs - rep.rhs_embedded)}};
      rec.pass = rel_gap <= tol;
    });
  });
  result.summary = summarize(result.records, "rel_gap", false);
  return result;
}

SweepResult run_subadd_sweep(const ExperimentConfig& config) {
  const double tol = config.effective_tol();

  SweepResult result;
  result.config = config;
  result.records.resize(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    result.records[i] = guarded_sample(i, [&](ExperimentRecord& rec) {
      Rng rng = Rng::stream(config.seed, i);
      const std::size_t dim = config.dim;
      const std::size_t nk23 = rng.uniform_int(1, 2);
      const std::size_t rank3 = rng.uniform_int(1, dim);
      KrausChannel ch23 = random_channel(dim, dim, nk23, rng);
      const DensityMatrix rho3 = random_state(dim, rank3, rng);
      const DensityMatrix rho2 = predual_apply(ch23, rho3);
      const std::size_t nk12 = rng.uniform_int(1, 2);
      KrausChannel ch12 = random_channel(dim, dim, nk12, rng);
      const DensityMatrix rho1 = predual_apply(ch12, rho2);

      const ObservableTuple xs1 = sample_cost_tuple(config, dim, rng);
      const ObservableTuple xs2 = config.costs == "random"
                                      ? sample_cost_tuple(config, dim, rng)
                                      : xs1;
      const ObservableTuple xs3 = config.costs == "random"
                                      ? sample_cost_tuple(config, dim, rng)
                                      : xs1;

      const SubadditivityReport rep = verify_subadditivity(
          ch12, ch23, rho1, rho2, rho3, xs1, xs2, xs3);
      rec.values = {{"dim", static_cast<double>(dim)},
                    {"c12", rep.c12},
                    {"c23", rep.c23},
                    {"c13", rep.c13},
                    {"slack", rep.slack}};
      rec.pass = rep.slack >= -tol;
    });
  });
  result.summary = summarize(result.records, "slack", true);
  return result;
}

SweepResult run_triangle_sweep(const ExperimentConfig& config) {
  const double tol = config.effective_tol();

  SweepResult result;
  result.config = config;
  result.records.resize(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    result.records[i] = guarded_sample(i, [&](ExperimentRecord& rec) {
      Rng rng = Rng::stream(config.seed, i);
      const std::size_t dim = config.dim;
      const std::size_t r1 = rng.uniform_int(1, dim);
      const std::size_t r2 = rng.uniform_int(1, dim);
      const std::size_t r3 = rng.uniform_int(1, dim);
      const DensityMatrix rho1 = random_state(dim, r1, rng);
      const DensityMatrix rho2 = random_state(dim, r2, rng);
      const DensityMatrix rho3 = random_state(dim, r3, rng);
      const ObservableTuple xs = sample_cost_tuple(config, dim, rng);

      const SdpSolution w12 = divergence(rho1, rho2, xs, config.solver);
      const SdpSolution w23 = divergence(rho2, rho3, xs, config.solver);
      const SdpSolution w13 = divergence(rho1, rho3, xs, config.solver);
      const bool all_optimal = w12.status == SolveStatus::Optimal &&
                               w23.status == SolveStatus::Optimal &&
                               w13.status == SolveStatus::Optimal;
      const double violation =
          w13.divergence - w12.divergence - w23.divergence;
      rec.values = {{"dim", static_cast<double>(dim)},
                    {"w12", w12.divergence},
                    {"w23", w23.divergence},
                    {"w13", w13.divergence},
                    {"violation", violation},
                    {"iterations",
                     static_cast<double>(w12.iterations + w23.iterations +
                                         w13.iterations)}};
      rec.warned = !all_optimal;
      rec.pass = rec.warned ? true : violation <= tol;
    });
  });
  result.summary = summarize(result.records, "violation", false);
  return result;
}

SweepResult run_selfdist(const ExperimentConfig& config) {
  const double tol = config.effective_tol();

  SweepResult result;
  result.config = config;
  result.records.resize(config.samples);
  parallel_for(config.samples, config.jobs, [&](std::size_t i) {
    result.records[i] = guarded_sample(i, [&](ExperimentRecord& rec) {
      Rng rng = Rng::stream(config.seed, i);
      const std::size_t rank = rng.uniform_int(1, config.dim);
      const DensityMatrix rho = random_state(config.dim, rank, rng);
      const ObservableTuple xs = sample_cost_tuple(config, config.dim, rng);
      const SdpSolution sol = divergence(rho, rho, xs, config.solver);
      rec.values = {{"dim", static_cast<double>(config.dim)},
                    {"rank", static_cast<double>(rank)},
                    {"w", sol.divergence},
                    {"optimal_cost", sol.optimal_cost},
                    {"iterations", static_cast<double>(sol.iterations)}};
      rec.warned = sol.status != SolveStatus::Optimal;
      rec.pass = rec.warned ? true : sol.divergence <= tol;
    });
  });
  result.summary = summarize(result.records, "w", false);
  return result;
}

void run_gen(const ExperimentConfig& config) {
  if (config.out.empty())
    throw InvalidParameters("gen: output directory required");
  std::filesystem::create_directories(config.out);
  for (std::size_t i = 0; i < config.samples; ++i) {
    Rng rng = Rng::stream(config.seed, i);
    const GenInstance inst = draw_instance(config.dim, rng);
    const ObservableTuple xs = sample_cost_tuple(config, config.dim, rng);
    const std::string base = config.out + "/";
    const std::string tag = std::to_string(i);
    save_json_file(state_to_json(inst.rho), base + "rho_" + tag + ".json");
    save_json_file(state_to_json(inst.sigma), base + "sigma_" + tag + ".json");
    save_json_file(channel_to_json(inst.ch), base + "channel_" + tag + ".json");
    save_json_file(observables_to_json(xs),
                   base + "observables_" + tag + ".json");
  }
}

json sweep_to_json(const SweepResult& r) {
  json records = json::array();
  for (const ExperimentRecord& rec : r.records) {
    json jr{{"sample", rec.index},
            {"pass", rec.pass},
            {"warned", rec.warned},
            {"duration_ms", rec.duration_ms}};
    for (const auto& [name, value] : rec.values) jr[name] = value;
    records.push_back(std::move(jr));
  }
  return json{{"schema_version", 1},
              {"kind", r.config.kind},
              {"config", config_to_json(r.config)},
              {"summary",
               {{"samples", r.summary.samples},
                {"passed", r.summary.passed},
                {"failed", r.summary.failed},
                {"warnings", r.summary.warnings},
                {"max_metric", r.summary.max_metric}}},
              {"records", std::move(records)}};
}

std::string sweep_to_csv(const SweepResult& r) {
  std::ostringstream out;
  out.precision(17);
  out << "schema_version,kind,sample";
  if (!r.records.empty())
    for (const auto& [name, value] : r.records.front().values)
      out << ',' << name;
  out << ",pass,warned,duration_ms\n";
  for (const ExperimentRecord& rec : r.records) {
    out << 1 << ',' << r.config.kind << ',' << rec.index;
    for (const auto& [name, value] : rec.values) out << ',' << value;
    out << ',' << (rec.pass ? 1 : 0) << ',' << (rec.warned ? 1 : 0) << ','
        << rec.duration_ms << '\n';
  }
  return out.str();
}

void write_sweep_output(const SweepResult& r) {
  if (r.config.out.empty()) return;
  if (r.config.format == "csv") {
    std::ofstream out(r.config.out);
    if (!out) throw ParseError("cannot open output file: " + r.config.out);
    out << sweep_to_csv(r);
  } else {
    save_json_file(sweep_to_json(r), r.config.out);
  }
}

}  // namespace qot
