// Copyright 2026 The QCS Authors
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

// Command-line front end: sweep, recover, rip, ratio, c0, plot.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "qcs/embedding.hpp"
#include "qcs/error.hpp"
#include "qcs/harness.hpp"
#include "qcs/io.hpp"
#include "qcs/rip.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
  std::string config;
  std::size_t n = 0, m = 0, s = 0, trials = 0;
  std::uint64_t seed = 0;
  double eta = 0.0;
  std::string mode;
  std::string out;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* s_opt = nullptr;
  CLI::Option* trials_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* eta_opt = nullptr;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* out_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--config", config, "JSON config file")->check(CLI::ExistingFile);
    n_opt = app->add_option("--n", n, "signal length");
    m_opt = app->add_option("--m", m, "number of measurements");
    s_opt = app->add_option("--s", s, "sparsity");
    trials_opt = app->add_option("--trials", trials, "trials per cell");
    seed_opt = app->add_option("--seed", seed, "base seed");
    eta_opt = app->add_option("--eta", eta, "noise level");
    mode_opt = app->add_option("--mode", mode, "quaternion|real")
                   ->check(CLI::IsMember({"quaternion", "real"}));
    out_opt = app->add_option("--out", out, "output path");
  }

  qcs::ExperimentConfig resolve() const {
    qcs::ExperimentConfig c;
    if (!config.empty()) c = qcs::config_from_json(qcs::read_json_file(config));
    if (n_opt->count()) c.n = n;
    if (m_opt->count()) c.m_values = {m};
    if (s_opt->count()) {
      c.s_rule = qcs::SparsityRule::kExplicit;
      c.s_values = {s};
    }
    if (trials_opt->count()) c.trials = trials;
    if (seed_opt->count()) c.base_seed = seed;
    if (eta_opt->count()) c.eta = eta;
    if (mode_opt->count()) c.scalar_mode = qcs::parse_mode(mode);
    if (out_opt->count()) c.output = out;
    return c;
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

qcs::QMatrix synthetic_matrix(const qcs::ExperimentConfig& c, std::size_t m, std::size_t s) {
  qcs::RngStream rng(c.base_seed, qcs::trial_stream_id(c.scalar_mode, c.n, m, s, 0));
  const double sigma2 = 1.0 / static_cast<double>(m);
  return c.scalar_mode == qcs::ScalarMode::kQuaternion
             ? qcs::sample_gaussian_matrix(rng, m, c.n, sigma2)
             : qcs::sample_real_gaussian_matrix(rng, m, c.n, sigma2);
}

int run_sweep_cmd(const CommonFlags& f, bool full) {
  qcs::ExperimentConfig c = f.resolve();
  if (full) {
    qcs::ExperimentConfig p = qcs::full_profile();
    p.base_seed = c.base_seed;
    p.scalar_mode = c.scalar_mode;
    p.eta = c.eta;
    p.solver = c.solver;
    p.output = c.output;
    p.workers = c.workers;
    p.record_timing = c.record_timing;
    if (f.trials_opt->count()) p.trials = c.trials;
    c = p;
  }
  const qcs::PhaseDiagram d = qcs::run_sweep(c);
  print_json(qcs::diagram_to_json(d));
  return 0;
}

struct RecoverFlags {
  std::string phi, y, x_true, export_socp;
};

int run_recover_cmd(const CommonFlags& f, const RecoverFlags& r) {
  const qcs::ExperimentConfig c = f.resolve();
  qcs::RecoveryProblem problem;
  problem.eta = c.eta;
  std::optional<qcs::QVector> truth;
  if (!r.phi.empty() || !r.y.empty()) {
    if (r.phi.empty() || r.y.empty()) {
      throw qcs::Error(qcs::ErrorCode::kInvalidConfig, "--phi and --y go together");
    }
    problem.Phi = qcs::qmatrix_from_json(qcs::read_json_file(r.phi));
    problem.y = qcs::qvector_from_json(qcs::read_json_file(r.y));
    if (!r.x_true.empty()) truth = qcs::qvector_from_json(qcs::read_json_file(r.x_true));
  } else {
    const std::size_t m = c.m_values.front();
    const std::size_t s = c.s_values.empty() ? 1 : c.s_values.front();
    qcs::RngStream rng(c.base_seed, qcs::trial_stream_id(c.scalar_mode, c.n, m, s, 0));
    const double sigma2 = 1.0 / static_cast<double>(m);
    problem.Phi = c.scalar_mode == qcs::ScalarMode::kQuaternion
                      ? qcs::sample_gaussian_matrix(rng, m, c.n, sigma2)
                      : qcs::sample_real_gaussian_matrix(rng, m, c.n, sigma2);
    const qcs::SparseSignal sig = qcs::sample_sparse_signal(rng, c.n, s, c.scalar_mode);
    problem.y = qcs::matvec(problem.Phi, sig.x);
    if (c.eta > 0.0) {
      problem.y = problem.y + qcs::sample_sphere_noise(rng, m, c.eta, c.scalar_mode);
    }
    truth = sig.x;
  }
  if (!r.export_socp.empty()) {
    json socp = qcs::socp_to_json(qcs::build_embedding(problem.Phi, problem.y));
    // With eta > 0 the equality A z = b relaxes to ||A z - b||_2 <= eta.
    socp["eta"] = problem.eta;
    qcs::write_text_file(r.export_socp, socp.dump() + '\n');
  }
  const qcs::SolveResult res = qcs::solve(problem, c.solver);
  json out = qcs::solve_result_to_json(res);
  if (truth) {
    const qcs::QVector diff = res.x_hat - *truth;
    out["err_l1"] = qcs::l1_norm(diff);
    out["err_l2"] = qcs::l2_norm(diff);
    out["perfect"] = qcs::l2_norm(diff) <= c.perfect_threshold;
  }
  if (!c.output.empty()) qcs::write_text_file(c.output, qcs::qvector_to_json(res.x_hat).dump() + '\n');
  print_json(out);
  return 0;
}

struct RipFlags {
  std::string phi;
  std::uint64_t sampled = 0;
  std::uint64_t budget = qcs::kDefaultEnumerationBudget;
  bool certificate = false;
};

int run_rip_cmd(const CommonFlags& f, const RipFlags& r) {
  const qcs::ExperimentConfig c = f.resolve();
  const std::size_t s = c.s_values.empty() ? 1 : c.s_values.front();
  const qcs::QMatrix Phi = r.phi.empty() ? synthetic_matrix(c, c.m_values.front(), s)
                                         : qcs::qmatrix_from_json(qcs::read_json_file(r.phi));
  const std::size_t order = r.certificate ? 2 * s : s;
  qcs::RipReport report;
  if (r.sampled > 0) {
    qcs::RngStream rng(c.base_seed, qcs::derive_stream_id({0x524950ULL, order}));
    report = qcs::sampled_delta_lower_bound(Phi, order, r.sampled, rng);
  } else {
    report = qcs::exact_delta(Phi, order, r.budget, c.workers);
  }
  json out = qcs::rip_report_to_json(report);
  if (r.certificate) {
    if (report.method != qcs::RipMethod::kExactEnumeration) {
      out["certificate"] = "a sampled lower bound cannot certify recovery";
    } else if (report.delta < std::sqrt(2.0) - 1.0) {
      const qcs::ErrorBoundConstants k = qcs::error_constants(report.delta);
      out["C0"] = k.C0;
      out["C1"] = k.C1;
      out["certificate"] = qcs::guarantee_text(k, s);
    } else {
      out["certificate"] = "delta_2s >= sqrt(2) - 1: no guarantee";
    }
  }
  if (!c.output.empty()) qcs::write_text_file(c.output, out.dump(2) + '\n');
  print_json(out);
  return 0;
}

int run_ratio_cmd(const CommonFlags& f, std::size_t samples) {
  const qcs::ExperimentConfig c = f.resolve();
  const qcs::RatioStats st = qcs::run_ratio_test(c.m_values.front(), samples, c.scalar_mode,
                                                 c.base_seed, c.ratio_dim);
  const json out = qcs::ratio_to_json(st);
  if (!c.output.empty()) qcs::write_text_file(c.output, out.dump(2) + '\n');
  print_json(out);
  return 0;
}

int run_c0_cmd(const CommonFlags& f, CLI::Option* s_max_opt, std::size_t s_max) {
  qcs::ExperimentConfig c = f.resolve();
  if (s_max_opt->count()) c.s_max = s_max;
  const qcs::C0Scatter sc = qcs::run_c0_experiment(c);
  const json j = qcs::c0_to_json(sc);
  if (!c.output.empty()) qcs::write_text_file(c.output, j.dump() + '\n');
  print_json({{"schema_version", qcs::kSchemaVersion},
              {"kind", "c0_summary"},
              {"points", sc.points.size()},
              {"skipped", sc.skipped},
              {"max_by_s", sc.max_by_s}});
  return 0;
}

int run_plot_cmd(const CommonFlags& f, const std::string& input) {
  if (f.out.empty()) throw qcs::Error(qcs::ErrorCode::kInvalidConfig, "plot needs --out");
  const json j = qcs::read_json_file(input);
  const std::string kind = j.is_object() ? j.value("kind", "") : "";
  if (kind == "phase_diagram") {
    qcs::emit_plot(qcs::diagram_from_json(j), f.out);
  } else if (kind == "c0_scatter") {
    qcs::emit_plot(qcs::c0_from_json(j), f.out);
  } else {
    throw qcs::Error(qcs::ErrorCode::kParseError,
                     "plot input must be a phase_diagram or c0_scatter document");
  }
  print_json({{"written", f.out}});
  return 0;
}

void print_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion compressed sensing experiments"};
  app.require_subcommand(1);

  CommonFlags sweep_f, recover_f, rip_f, ratio_f, c0_f, plot_f;

  auto* sweep = app.add_subcommand("sweep", "phase-transition sweep");
  sweep_f.attach(sweep);
  bool full = false;
  sweep->add_flag("--full", full, "full grid: m = 2..64, s = 1..m/2, 1000 trials (long-running)");

  auto* recover = app.add_subcommand("recover", "solve one recovery problem");
  recover_f.attach(recover);
  RecoverFlags rf;
  recover->add_option("--phi", rf.phi, "qmatrix JSON")->check(CLI::ExistingFile);
  recover->add_option("--y", rf.y, "qvector JSON")->check(CLI::ExistingFile);
  recover->add_option("--x-true", rf.x_true, "qvector JSON of the true signal")
      ->check(CLI::ExistingFile);
  recover->add_option("--export-socp", rf.export_socp, "write the real SOCP form as JSON");

  auto* rip = app.add_subcommand("rip", "restricted isometry constant");
  rip_f.attach(rip);
  RipFlags rpf;
  rip->add_option("--phi", rpf.phi, "qmatrix JSON")->check(CLI::ExistingFile);
  rip->add_option("--sampled", rpf.sampled, "use a sampled lower bound with this many draws");
  rip->add_option("--budget", rpf.budget, "maximum supports to enumerate");
  rip->add_flag("--certificate", rpf.certificate, "compute delta_2s and print the guarantee");

  auto* ratio = app.add_subcommand("ratio", "distribution of ||Phi x||^2 / ||x||^2");
  ratio_f.attach(ratio);
  std::size_t samples = 20000;
  ratio->add_option("--samples", samples, "number of draws (>= 1000)");

  auto* c0 = app.add_subcommand("c0", "empirical lower bounds on C0");
  c0_f.attach(c0);
  std::size_t s_max = 64;
  auto* s_max_opt = c0->add_option("--s-max", s_max, "largest s to evaluate");

  auto* plot = app.add_subcommand("plot", "render a summary or c0 document as SVG");
  plot_f.attach(plot);
  std::string input;
  plot->add_option("--input", input, "summary.json or c0 JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    std::cerr << app.help();
    return 2;
  }

  try {
    if (*sweep) return run_sweep_cmd(sweep_f, full);
    if (*recover) return run_recover_cmd(recover_f, rf);
    if (*rip) return run_rip_cmd(rip_f, rpf);
    if (*ratio) return run_ratio_cmd(ratio_f, samples);
    if (*c0) return run_c0_cmd(c0_f, s_max_opt, s_max);
    if (*plot) return run_plot_cmd(plot_f, input);
  } catch (const qcs::Error& e) {
    print_error(std::string(qcs::error_code_name(e.code())), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return 1;
  }
  return 1;
}
