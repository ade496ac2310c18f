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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qot/errors.hpp"
#include "qot/generators.hpp"
#include "qot/harness.hpp"
#include "qot/integral.hpp"
#include "qot/io.hpp"

namespace {

using namespace qot;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

struct CommonFlags {
  std::string config_path;
  ExperimentConfig config;

  CLI::Option* opt_dim = nullptr;
  CLI::Option* opt_d = nullptr;
  CLI::Option* opt_costs = nullptr;
  CLI::Option* opt_samples = nullptr;
  CLI::Option* opt_seed = nullptr;
  CLI::Option* opt_tol = nullptr;
  CLI::Option* opt_out = nullptr;
  CLI::Option* opt_format = nullptr;
  CLI::Option* opt_jobs = nullptr;
  CLI::Option* opt_quad_t = nullptr;
  CLI::Option* opt_quad_panels = nullptr;
  CLI::Option* opt_solver_tol = nullptr;

  std::size_t dim = 2, d = 1, samples = 100, jobs = 1;
  std::uint64_t seed = 1;
  double tol = 0.0, quad_t = 4.0, solver_tol = 1e-8;
  std::size_t quad_panels = 64;
  std::string costs = "pauli", out, format = "json";

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    opt_dim = cmd->add_option("--dim", dim, "Hilbert space dimension");
    opt_d = cmd->add_option("--d", d, "cost tuple length (random family)");
    opt_costs =
        cmd->add_option("--costs", costs, "pauli | random | observable file");
    opt_samples = cmd->add_option("--samples", samples, "sample count");
    opt_seed = cmd->add_option("--seed", seed, "master seed");
    opt_tol = cmd->add_option("--tol", tol, "pass/fail tolerance");
    opt_out = cmd->add_option("--out", out, "output path");
    opt_format = cmd->add_option("--format", format, "json | csv");
    opt_jobs = cmd->add_option("--jobs", jobs, "parallel sample workers");
    opt_quad_t = cmd->add_option("--quad-T", quad_t, "quadrature truncation");
    opt_quad_panels =
        cmd->add_option("--quad-panels", quad_panels, "quadrature panels");
    opt_solver_tol =
        cmd->add_option("--solver-tol", solver_tol, "solver residual tolerance");
  }

  // Precedence: explicit flag > config file > default.
  ExperimentConfig merged(const std::string& kind) {
    ExperimentConfig c;
    if (!config_path.empty()) c = config_from_json(load_json_file(config_path));
    c.kind = kind;
    if (opt_dim->count()) c.dim = dim;
    if (opt_d->count()) c.d = d;
    if (opt_costs->count()) c.costs = costs;
    if (opt_samples->count()) c.samples = samples;
    if (opt_seed->count()) c.seed = seed;
    if (opt_tol->count()) c.tol = tol;
    if (opt_out->count()) c.out = out;
    if (opt_format->count()) c.format = format;
    if (opt_jobs->count()) c.jobs = jobs;
    if (opt_quad_t->count()) c.quad.truncation = quad_t;
    if (opt_quad_panels->count()) c.quad.panels = quad_panels;
    if (opt_solver_tol->count()) {
      c.solver.tol_primal = solver_tol;
      c.solver.tol_dual = solver_tol;
    }
    return c;
  }
};

void print_summary(const SweepResult& r) {
  std::printf(
      "%s: samples=%zu passed=%zu failed=%zu warnings=%zu max_metric=%.6e "
      "tol=%.1e\n",
      r.config.kind.c_str(), r.summary.samples, r.summary.passed,
      r.summary.failed, r.summary.warnings, r.summary.max_metric,
      r.config.effective_tol());
}

int finish_sweep(const SweepResult& r) {
  write_sweep_output(r);
  print_summary(r);
  return r.summary.failed == 0 ? kExitPass : kExitViolation;
}

// Instance inputs for the single-shot commands: either files or a seeded
// draw with ρ := Φ*(σ).
struct InstanceFlags {
  std::string rho_path, sigma_path, channel_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rho", rho_path, "density_matrix file for rho");
    cmd->add_option("--sigma", sigma_path, "density_matrix file for sigma");
    cmd->add_option("--channel", channel_path, "kraus_channel file");
  }
};

ObservableTuple resolve_costs(const std::string& costs, std::size_t dim,
                              std::size_t d, Rng& rng) {
  ExperimentConfig c;
  c.costs = costs;
  c.d = d;
  return sample_cost_tuple(c, dim, rng);
}

int cmd_cost(CommonFlags& common, InstanceFlags& inst) {
  Rng rng = Rng::stream(common.seed, 0);
  json out;
  if (!inst.rho_path.empty() || !inst.channel_path.empty()) {
    if (inst.rho_path.empty() || inst.sigma_path.empty() ||
        inst.channel_path.empty())
      throw InvalidParameters("cost: need --rho, --sigma and --channel files");
    const DensityMatrix rho = state_from_json(load_json_file(inst.rho_path));
    const DensityMatrix sigma =
        state_from_json(load_json_file(inst.sigma_path));
    const KrausChannel ch =
        channel_from_json(load_json_file(inst.channel_path));
    const ObservableTuple xs =
        resolve_costs(common.costs, rho.dim(), common.d, rng);
    const ObservableTuple ys =
        common.costs == "random"
            ? resolve_costs(common.costs, sigma.dim(), common.d, rng)
            : (sigma.dim() == rho.dim()
                   ? xs
                   : resolve_costs(common.costs, sigma.dim(), common.d, rng));
    out = cost_report_to_json(cost(ch, rho, sigma, xs, ys));
  } else {
    KrausChannel ch = random_channel(common.dim, common.dim,
                                     1 + rng.uniform_int(0, 1), rng);
    const DensityMatrix sigma =
        random_state(common.dim, 1 + rng.uniform_int(0, common.dim - 1), rng);
    const DensityMatrix rho = predual_apply(ch, sigma);
    const ObservableTuple xs =
        resolve_costs(common.costs, common.dim, common.d, rng);
    out = cost_report_to_json(cost(ch, rho, sigma, xs, xs));
  }
  std::cout << out.dump(2) << '\n';
  if (!common.out.empty()) save_json_file(out, common.out);
  return kExitPass;
}

int cmd_optimize(CommonFlags& common, InstanceFlags& inst) {
  Rng rng = Rng::stream(common.seed, 0);
  DensityMatrix rho = [&] {
    if (!inst.rho_path.empty())
      return state_from_json(load_json_file(inst.rho_path));
    return random_state(common.dim, 1 + rng.uniform_int(0, common.dim - 1), rng);
  }();
  DensityMatrix sigma = [&] {
    if (!inst.sigma_path.empty())
      return state_from_json(load_json_file(inst.sigma_path));
    return random_state(common.dim, 1 + rng.uniform_int(0, common.dim - 1), rng);
  }();
  const ObservableTuple xs =
      resolve_costs(common.costs, rho.dim(), common.d, rng);

  SolverParams params;
  if (common.opt_solver_tol->count()) {
    params.tol_primal = common.solver_tol;
    params.tol_dual = common.solver_tol;
  }
  const SdpProblem problem = build_sdp(rho, sigma, xs, xs);
  const SdpSolution sol = solve(problem, params);
  json out = solution_to_json(sol);
  out["certificate"] = certificate_to_json(certify(sol, problem));
  std::cout << out.dump(2) << '\n';
  if (!common.out.empty()) save_json_file(out, common.out);
  return sol.status == SolveStatus::Optimal ? kExitPass : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qot: transport costs, Wasserstein divergence and identity checks for "
      "finite-dimensional quantum states"};
  app.require_subcommand(1);

  CommonFlags cost_flags, opt_flags, integral_flags, subadd_flags,
      triangle_flags, selfdist_flags, gen_flags;
  InstanceFlags cost_inst, opt_inst;

  CLI::App* c_cost =
      app.add_subcommand("cost", "transport cost of one channel instance");
  cost_flags.attach(c_cost);
  cost_inst.attach(c_cost);

  CLI::App* c_opt = app.add_subcommand(
      "optimize", "Wasserstein divergence of a state pair (SDP solve)");
  opt_flags.attach(c_opt);
  opt_inst.attach(c_opt);

  CLI::App* c_int = app.add_subcommand(
      "integral-check", "sweep: cost vs sech-measure quadrature");
  integral_flags.attach(c_int);

  CLI::App* c_sub = app.add_subcommand(
      "subadd-sweep", "sweep: cost subadditivity along channel chains");
  subadd_flags.attach(c_sub);

  CLI::App* c_tri = app.add_subcommand(
      "triangle-sweep", "sweep: triangle inequality of the divergence");
  triangle_flags.attach(c_tri);

  CLI::App* c_self =
      app.add_subcommand("selfdist", "sweep: self-distance W(rho, rho)");
  selfdist_flags.attach(c_self);

  CLI::App* c_gen =
      app.add_subcommand("gen", "emit seeded instance files");
  gen_flags.attach(c_gen);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_cost->parsed()) return cmd_cost(cost_flags, cost_inst);
    if (c_opt->parsed()) return cmd_optimize(opt_flags, opt_inst);
    if (c_int->parsed())
      return finish_sweep(run_integral_check(integral_flags.merged("integral-check")));
    if (c_sub->parsed())
      return finish_sweep(run_subadd_sweep(subadd_flags.merged("subadd-sweep")));
    if (c_tri->parsed())
      return finish_sweep(run_triangle_sweep(triangle_flags.merged("triangle-sweep")));
    if (c_self->parsed())
      return finish_sweep(run_selfdist(selfdist_flags.merged("selfdist")));
    if (c_gen->parsed()) {
      run_gen(gen_flags.merged("gen"));
      return kExitPass;
    }
  } catch (const NumericalFailure& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
