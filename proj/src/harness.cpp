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

#include "qcs/harness.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "qcs/error.hpp"
#include "qcs/io.hpp"
#include "qcs/parallel.hpp"

namespace qcs {

namespace {

constexpr std::uint64_t kSweepTag = 0x5357454550ULL;  // "SWEEP"
constexpr std::uint64_t kC0Tag = 0x43305343ULL;       // "C0SC"
constexpr std::uint64_t kRatioTag = 0x524154494FULL;  // "RATIO"

using Clock = std::chrono::steady_clock;
using TrialKey = std::tuple<std::size_t, std::size_t, std::size_t>;

[[noreturn]] void bad_config(const std::string& msg) {
  throw Error(ErrorCode::kInvalidConfig, msg);
}

nlohmann::json solver_to_json(const SolverParams& p) {
  return {{"rho", p.rho},
          {"max_iters", p.max_iters},
          {"tol_primal", p.tol_primal},
          {"tol_dual", p.tol_dual},
          {"adaptive_rho", p.adaptive_rho},
          {"rho_factor", p.rho_factor},
          {"rho_trigger", p.rho_trigger},
          {"check_every", p.check_every},
          {"adapt_until", p.adapt_until},
          {"certify_every", p.certify_every},
          {"polish", p.polish},
          {"polish_threshold", p.polish_threshold}};
}

SolverParams solver_from_json(const nlohmann::json& j, SolverParams p) {
  p.rho = j.value("rho", p.rho);
  p.max_iters = j.value("max_iters", p.max_iters);
  p.tol_primal = j.value("tol_primal", p.tol_primal);
  p.tol_dual = j.value("tol_dual", p.tol_dual);
  p.adaptive_rho = j.value("adaptive_rho", p.adaptive_rho);
  p.rho_factor = j.value("rho_factor", p.rho_factor);
  p.rho_trigger = j.value("rho_trigger", p.rho_trigger);
  p.check_every = j.value("check_every", p.check_every);
  p.adapt_until = j.value("adapt_until", p.adapt_until);
  p.certify_every = j.value("certify_every", p.certify_every);
  p.polish = j.value("polish", p.polish);
  p.polish_threshold = j.value("polish_threshold", p.polish_threshold);
  return p;
}

// Config echo stored with results; leaves out where and how fast it ran.
nlohmann::json config_snapshot(const ExperimentConfig& c) {
  nlohmann::json j = config_to_json(c);
  j.erase("output");
  j.erase("workers");
  return j;
}

std::map<TrialKey, TrialRecord> load_records(const std::filesystem::path& file,
                                             const ExperimentConfig& config) {
  std::map<TrialKey, TrialRecord> out;
  if (!std::filesystem::exists(file)) return out;
  std::string text;
  {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  // An interrupted append can leave a partial last line; drop it.
  const auto last_newline = text.rfind('\n');
  const std::size_t keep = last_newline == std::string::npos ? 0 : last_newline + 1;
  if (keep != text.size()) {
    text.resize(keep);
    write_text_file(file, text);
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    TrialRecord r = trial_from_json(nlohmann::json::parse(line));
    if (r.seed != config.base_seed ||
        r.stream_id != trial_stream_id(config.scalar_mode, config.n, r.m, r.s, r.trial_index)) {
      bad_config("output directory holds trial records from a different configuration");
    }
    out[{r.m, r.s, r.trial_index}] = std::move(r);
  }
  return out;
}

}  // namespace

std::string_view mode_name(ScalarMode mode) {
  return mode == ScalarMode::kQuaternion ? "quaternion" : "real";
}

ScalarMode parse_mode(std::string_view text) {
  if (text == "quaternion") return ScalarMode::kQuaternion;
  if (text == "real") return ScalarMode::kReal;
  bad_config("scalar mode must be 'quaternion' or 'real', got '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
  if (n < 1) bad_config("n must be positive");
  if (m_values.empty()) bad_config("m_values must not be empty");
  for (std::size_t m : m_values) {
    if (m < 1) bad_config("every m must be positive");
  }
  if (trials < 1) bad_config("trials must be at least 1");
  if (!(perfect_threshold > 0.0)) bad_config("perfect_threshold must be positive");
  if (!(eta >= 0.0)) bad_config("eta must be non-negative");
  if (!(solver.rho > 0.0) || !(solver.tol_primal > 0.0) || !(solver.tol_dual > 0.0) ||
      solver.max_iters < 1) {
    bad_config("solver rho, tolerances and max_iters must be positive");
  }
  if (s_rule == SparsityRule::kExplicit) {
    if (s_values.empty()) bad_config("explicit s_rule needs s_values");
    for (std::size_t s : s_values) {
      if (s < 1 || s > n) bad_config("every s must lie in [1, n]");
    }
  }
  if (cells().empty()) bad_config("no (m, s) cell satisfies s <= m/2");
}

std::vector<std::pair<std::size_t, std::size_t>> ExperimentConfig::cells() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t m : m_values) {
    const std::size_t s_cap = std::min(m / 2, n);
    if (s_rule == SparsityRule::kHalfM) {
      for (std::size_t s = 1; s <= s_cap; ++s) out.emplace_back(m, s);
    } else {
      for (std::size_t s : s_values) {
        if (s >= 1 && s <= s_cap) out.emplace_back(m, s);
      }
    }
  }
  return out;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_config("config must be a JSON object");
  ExperimentConfig c;
  try {
    c.n = j.value("n", c.n);
    if (j.contains("m_values")) c.m_values = j.at("m_values").get<std::vector<std::size_t>>();
    if (j.contains("s_rule")) {
      const auto rule = j.at("s_rule").get<std::string>();
      if (rule == "1..m/2") {
        c.s_rule = SparsityRule::kHalfM;
      } else if (rule == "explicit") {
        c.s_rule = SparsityRule::kExplicit;
      } else {
        bad_config("s_rule must be '1..m/2' or 'explicit'");
      }
    }
    if (j.contains("s_values")) {
      c.s_values = j.at("s_values").get<std::vector<std::size_t>>();
      if (!j.contains("s_rule")) c.s_rule = SparsityRule::kExplicit;
    }
    c.trials = j.value("trials", c.trials);
    c.base_seed = j.value("base_seed", c.base_seed);
    if (j.contains("scalar_mode")) c.scalar_mode = parse_mode(j.at("scalar_mode").get<std::string>());
    c.perfect_threshold = j.value("perfect_threshold", c.perfect_threshold);
    c.eta = j.value("eta", c.eta);
    if (j.contains("solver")) c.solver = solver_from_json(j.at("solver"), c.solver);
    c.output = j.value("output", c.output);
    c.record_timing = j.value("record_timing", c.record_timing);
    c.workers = j.value("workers", c.workers);
    c.s_max = j.value("s_max", c.s_max);
    c.ratio_dim = j.value("ratio_dim", c.ratio_dim);
  } catch (const nlohmann::json::exception& e) {
    bad_config(std::string("malformed config: ") + e.what());
  }
  return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  return {{"schema_version", kSchemaVersion},
          {"n", c.n},
          {"m_values", c.m_values},
          {"s_rule", c.s_rule == SparsityRule::kHalfM ? "1..m/2" : "explicit"},
          {"s_values", c.s_values},
          {"trials", c.trials},
          {"base_seed", c.base_seed},
          {"scalar_mode", mode_name(c.scalar_mode)},
          {"perfect_threshold", c.perfect_threshold},
          {"eta", c.eta},
          {"solver", solver_to_json(c.solver)},
          {"output", c.output},
          {"record_timing", c.record_timing},
          {"workers", c.workers},
          {"s_max", c.s_max},
          {"ratio_dim", c.ratio_dim}};
}

ExperimentConfig full_profile() {
  ExperimentConfig c;
  c.n = 256;
  c.m_values.clear();
  for (std::size_t m = 2; m <= 64; ++m) c.m_values.push_back(m);
  c.s_rule = SparsityRule::kHalfM;
  c.trials = 1000;
  return c;
}

nlohmann::json trial_to_json(const TrialRecord& r) {
  nlohmann::json j = {{"schema_version", kSchemaVersion},
                      {"m", r.m},
                      {"s", r.s},
                      {"trial_index", r.trial_index},
                      {"seed", r.seed},
                      {"stream_id", r.stream_id},
                      {"err_l1", r.err_l1},
                      {"err_l2", r.err_l2},
                      {"perfect", r.perfect},
                      {"status", r.status},
                      {"iterations", r.iterations},
                      {"polished", r.polished}};
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
  return j;
}

TrialRecord trial_from_json(const nlohmann::json& j) {
  TrialRecord r;
  try {
    r.m = j.at("m").get<std::size_t>();
    r.s = j.at("s").get<std::size_t>();
    r.trial_index = j.at("trial_index").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.stream_id = j.at("stream_id").get<std::uint64_t>();
    r.err_l1 = j.at("err_l1").get<double>();
    r.err_l2 = j.at("err_l2").get<double>();
    r.perfect = j.at("perfect").get<bool>();
    r.status = j.at("status").get<std::string>();
    r.iterations = j.at("iterations").get<int>();
    r.polished = j.at("polished").get<bool>();
    if (j.contains("wall_seconds")) r.wall_seconds = j.at("wall_seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed trial record: ") + e.what());
  }
  return r;
}

std::uint64_t trial_stream_id(ScalarMode mode, std::size_t n, std::size_t m, std::size_t s,
                              std::size_t trial_index) {
  return derive_stream_id({kSweepTag, mode == ScalarMode::kQuaternion ? 0ULL : 1ULL, n, m, s,
                           trial_index});
}

TrialRecord run_trial(const ExperimentConfig& config, std::size_t m, std::size_t s,
                      std::size_t trial_index) {
  const auto start = Clock::now();
  TrialRecord rec;
  rec.m = m;
  rec.s = s;
  rec.trial_index = trial_index;
  rec.seed = config.base_seed;
  rec.stream_id = trial_stream_id(config.scalar_mode, config.n, m, s, trial_index);

  RngStream rng(rec.seed, rec.stream_id);
  const double sigma2 = 1.0 / static_cast<double>(m);
  const QMatrix Phi = config.scalar_mode == ScalarMode::kQuaternion
                          ? sample_gaussian_matrix(rng, m, config.n, sigma2)
                          : sample_real_gaussian_matrix(rng, m, config.n, sigma2);
  const SparseSignal signal = sample_sparse_signal(rng, config.n, s, config.scalar_mode);
  QVector y = matvec(Phi, signal.x);
  if (config.eta > 0.0) y = y + sample_sphere_noise(rng, m, config.eta, config.scalar_mode);

  try {
    const SolveResult res = solve({Phi, y, config.eta}, config.solver);
    const QVector diff = res.x_hat - signal.x;
    rec.err_l1 = l1_norm(diff);
    rec.err_l2 = l2_norm(diff);
    rec.perfect = rec.err_l2 <= config.perfect_threshold;
    rec.status = std::string(status_name(res.status));
    rec.iterations = res.iterations;
    rec.polished = res.polished;
  } catch (const Error& e) {
    rec.status = "Error";
    rec.err_l1 = l1_norm(signal.x);
    rec.err_l2 = l2_norm(signal.x);
    rec.perfect = false;
  }
  if (config.record_timing) {
    rec.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  }
  return rec;
}

const PhaseCell* PhaseDiagram::find(std::size_t m, std::size_t s) const {
  for (const auto& c : cells) {
    if (c.m == m && c.s == s) return &c;
  }
  return nullptr;
}

nlohmann::json diagram_to_json(const PhaseDiagram& d) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : d.cells) {
    cells.push_back({{"m", c.m}, {"s", c.s}, {"trials", c.trials}, {"perfect", c.perfect},
                     {"rate", c.rate()}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "phase_diagram"},
          {"config", d.config},
          {"cells", std::move(cells)}};
}

PhaseDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("kind", "") != "phase_diagram") {
    throw Error(ErrorCode::kParseError, "expected a phase_diagram document");
  }
  PhaseDiagram d;
  d.config = j.value("config", nlohmann::json::object());
  for (const auto& c : j.at("cells")) {
    d.cells.push_back({c.at("m").get<std::size_t>(), c.at("s").get<std::size_t>(),
                       c.at("trials").get<std::size_t>(), c.at("perfect").get<std::size_t>()});
  }
  return d;
}

std::string diagram_to_csv(const PhaseDiagram& d) {
  std::string out = "m,s,trials,perfect,rate\n";
  char buf[128];
  for (const auto& c : d.cells) {
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%zu,%zu,%.17g\n", c.m, c.s, c.trials, c.perfect,
                  c.rate());
    out += buf;
  }
  return out;
}

PhaseDiagram run_sweep(const ExperimentConfig& config) {
  config.validate();
  const std::size_t workers = config.workers == 0 ? default_worker_count() : config.workers;
  const bool persist = !config.output.empty();
  const std::filesystem::path dir(config.output);
  const std::filesystem::path trials_file = dir / "trials.jsonl";

  std::map<TrialKey, TrialRecord> records;
  if (persist) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + dir.string());
    records = load_records(trials_file, config);
  }

  for (const auto& [m, s] : config.cells()) {
    std::vector<std::size_t> missing;
    for (std::size_t t = 0; t < config.trials; ++t) {
      if (!records.contains({m, s, t})) missing.push_back(t);
    }
    if (missing.empty()) continue;
    std::vector<TrialRecord> fresh(missing.size());
    parallel_for(missing.size(), workers,
                 [&](std::size_t k) { fresh[k] = run_trial(config, m, s, missing[k]); });
    if (persist) {
      std::string chunk;
      for (const auto& r : fresh) chunk += trial_to_json(r).dump() + '\n';
      std::ofstream out(trials_file, std::ios::binary | std::ios::app);
      if (!out) throw Error(ErrorCode::kIoFailure, "cannot append to " + trials_file.string());
      out << chunk;
      out.flush();
      if (!out) throw Error(ErrorCode::kIoFailure, "append failed for " + trials_file.string());
    }
    for (auto& r : fresh) records[{r.m, r.s, r.trial_index}] = std::move(r);
  }

  PhaseDiagram diagram;
  diagram.config = config_snapshot(config);
  for (const auto& [m, s] : config.cells()) {
    PhaseCell cell{m, s, 0, 0};
    for (std::size_t t = 0; t < config.trials; ++t) {
      const auto it = records.find({m, s, t});
      if (it == records.end()) continue;
      ++cell.trials;
      if (it->second.perfect) ++cell.perfect;
    }
    diagram.cells.push_back(cell);
  }
  if (persist) {
    write_text_file(dir / "summary.json", diagram_to_json(diagram).dump(2) + '\n');
    write_text_file(dir / "diagram.csv", diagram_to_csv(diagram));
  }
  return diagram;
}

C0Scatter run_c0_experiment(const ExperimentConfig& config) {
  if (config.n < 1 || config.m_values.empty() || config.trials < 1) {
    bad_config("c0 experiment needs n, m and trials");
  }
  const std::size_t n = config.n;
  const std::size_t m = config.m_values.front();
  const std::size_t s_max = std::min(config.s_max, n);
  if (s_max < 1) bad_config("s_max must be at least 1");
  const ScalarMode mode = config.scalar_mode;
  const std::size_t workers = config.workers == 0 ? default_worker_count() : config.workers;

  RngStream matrix_rng(config.base_seed, derive_stream_id({kC0Tag, n, m, ~0ULL}));
  const double sigma2 = 1.0 / static_cast<double>(m);
  const QMatrix Phi = mode == ScalarMode::kQuaternion
                          ? sample_gaussian_matrix(matrix_rng, m, n, sigma2)
                          : sample_real_gaussian_matrix(matrix_rng, m, n, sigma2);

  std::vector<std::vector<C0Point>> per_trial(config.trials);
  std::vector<std::size_t> skipped(config.trials, 0);
  parallel_for(config.trials, workers, [&](std::size_t t) {
    RngStream rng(config.base_seed, derive_stream_id({kC0Tag, n, m, t}));
    const QVector x = sample_gaussian_vector(rng, n, 1.0, mode);
    QVector y = matvec(Phi, x);
    if (config.eta > 0.0) y = y + sample_sphere_noise(rng, m, config.eta, mode);
    const SolveResult res = solve({Phi, y, config.eta}, config.solver);
    const double num = l1_norm(res.x_hat - x);
    for (std::size_t s = 1; s <= s_max; ++s) {
      const double den = l1_norm(x - best_s_sparse(x, s));
      if (den < 1e-12) {
        ++skipped[t];
        continue;
      }
      per_trial[t].push_back({t, s, num / den});
    }
  });

  C0Scatter out;
  out.max_by_s.assign(s_max, 0.0);
  for (std::size_t t = 0; t < config.trials; ++t) {
    out.skipped += skipped[t];
    for (const auto& p : per_trial[t]) {
      out.max_by_s[p.s - 1] = std::max(out.max_by_s[p.s - 1], p.ratio);
      out.points.push_back(p);
    }
  }
  return out;
}

nlohmann::json c0_to_json(const C0Scatter& c) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : c.points) pts.push_back({p.trial, p.s, p.ratio});
  return {{"schema_version", kSchemaVersion},
          {"kind", "c0_scatter"},
          {"points", std::move(pts)},
          {"max_by_s", c.max_by_s},
          {"skipped", c.skipped}};
}

C0Scatter c0_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("kind", "") != "c0_scatter") {
    throw Error(ErrorCode::kParseError, "expected a c0_scatter document");
  }
  C0Scatter c;
  for (const auto& p : j.at("points")) {
    c.points.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>(),
                        p.at(2).get<double>()});
  }
  c.max_by_s = j.at("max_by_s").get<std::vector<double>>();
  c.skipped = j.value("skipped", std::size_t{0});
  return c;
}

double ks_distance_gamma(std::vector<double> sample, double shape, double rate) {
  if (sample.empty()) return 0.0;
  std::sort(sample.begin(), sample.end());
  const double N = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double F = sample[i] <= 0.0 ? 0.0 : boost::math::gamma_p(shape, rate * sample[i]);
    d = std::max({d, F - static_cast<double>(i) / N, static_cast<double>(i + 1) / N - F});
  }
  return d;
}

RatioStats run_ratio_test(std::size_t m, std::size_t samples, ScalarMode mode,
                          std::uint64_t seed, std::size_t dim) {
  if (m < 1) bad_config("m must be positive");
  if (samples < 1000) bad_config("ratio test needs at least 1000 samples");
  if (dim < 1) bad_config("signal length must be positive");
  RngStream rng(seed, derive_stream_id({kRatioTag, m, dim, mode == ScalarMode::kReal ? 1ULL : 0ULL}));
  const QVector x = [&] {
    const QVector raw = sample_gaussian_vector(rng, dim, 1.0, mode);
    return scale(raw, 1.0 / l2_norm(raw));
  }();
  const double sigma2 = 1.0 / static_cast<double>(m);

  std::vector<double> ratios(samples);
  for (auto& r : ratios) {
    const QMatrix Phi = mode == ScalarMode::kQuaternion
                            ? sample_gaussian_matrix(rng, m, dim, sigma2)
                            : sample_real_gaussian_matrix(rng, m, dim, sigma2);
    const double nphi = l2_norm(matvec(Phi, x));
    r = nphi * nphi;  // ||x|| = 1
  }

  RatioStats st;
  st.m = m;
  st.samples = samples;
  double sum = 0.0;
  for (double r : ratios) sum += r;
  st.mean = sum / static_cast<double>(samples);
  double ss = 0.0;
  for (double r : ratios) ss += (r - st.mean) * (r - st.mean);
  st.variance = ss / static_cast<double>(samples - 1);
  const double md = static_cast<double>(m);
  st.gamma_shape = mode == ScalarMode::kQuaternion ? 2.0 * md : 0.5 * md;
  st.gamma_rate = st.gamma_shape;
  st.ks_distance_to_gamma = ks_distance_gamma(std::move(ratios), st.gamma_shape, st.gamma_rate);
  return st;
}

nlohmann::json ratio_to_json(const RatioStats& r) {
  return {{"schema_version", kSchemaVersion},
          {"kind", "ratio_stats"},
          {"m", r.m},
          {"samples", r.samples},
          {"mean", r.mean},
          {"variance", r.variance},
          {"gamma_shape", r.gamma_shape},
          {"gamma_rate", r.gamma_rate},
          {"ks_distance_to_gamma", r.ks_distance_to_gamma}};
}

// ---- SVG output ----------------------------------------------------------

namespace {

std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string svg_open(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_num(width) + "\" height=\"" +
         fmt_num(height) + "\" viewBox=\"0 0 " + fmt_num(width) + " " + fmt_num(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n";
}

std::string svg_text(double x, double y, const std::string& text, const char* anchor = "middle",
                     const std::string& extra = "") {
  return "<text x=\"" + fmt_num(x) + "\" y=\"" + fmt_num(y) + "\" text-anchor=\"" + anchor +
         "\"" + extra + ">" + text + "</text>\n";
}

}  // namespace

std::string render_heatmap_svg(const PhaseDiagram& d) {
  if (d.cells.empty()) throw Error(ErrorCode::kIoFailure, "nothing to plot: empty diagram");
  std::set<std::size_t> ms;
  std::set<std::size_t> ss;
  for (const auto& c : d.cells) {
    ms.insert(c.m);
    ss.insert(c.s);
  }
  const std::vector<std::size_t> mv(ms.begin(), ms.end());
  const std::vector<std::size_t> sv(ss.begin(), ss.end());
  constexpr double cell = 14.0;
  constexpr double left = 60.0, top = 40.0, bottom = 50.0, right = 20.0;
  const double w = left + cell * static_cast<double>(mv.size()) + right;
  const double h = top + cell * static_cast<double>(sv.size()) + bottom;

  std::string svg = svg_open(w, h);
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt_num(w) + "\" height=\"" + fmt_num(h) +
         "\" fill=\"white\"/>\n";
  svg += svg_text(w / 2, 20, "Perfect recovery rate");
  for (const auto& c : d.cells) {
    const auto xi = std::lower_bound(mv.begin(), mv.end(), c.m) - mv.begin();
    const auto yi = std::lower_bound(sv.begin(), sv.end(), c.s) - sv.begin();
    const double x = left + cell * static_cast<double>(xi);
    const double y = top + cell * static_cast<double>(sv.size() - 1 - static_cast<std::size_t>(yi));
    const int g = static_cast<int>(std::lround(255.0 * c.rate()));
    svg += "<rect x=\"" + fmt_num(x) + "\" y=\"" + fmt_num(y) + "\" width=\"" + fmt_num(cell) +
           "\" height=\"" + fmt_num(cell) + "\" fill=\"rgb(" + std::to_string(g) + "," +
           std::to_string(g) + "," + std::to_string(g) + ")\"/>\n";
  }
  const double axis_y = top + cell * static_cast<double>(sv.size());
  const std::size_t mstep = std::max<std::size_t>(1, mv.size() / 10);
  for (std::size_t i = 0; i < mv.size(); i += mstep) {
    svg += svg_text(left + cell * (static_cast<double>(i) + 0.5), axis_y + 14, std::to_string(mv[i]));
  }
  const std::size_t sstep = std::max<std::size_t>(1, sv.size() / 10);
  for (std::size_t i = 0; i < sv.size(); i += sstep) {
    const double y = top + cell * (static_cast<double>(sv.size() - 1 - i) + 0.5) + 4;
    svg += svg_text(left - 6, y, std::to_string(sv[i]), "end");
  }
  svg += svg_text(left + cell * static_cast<double>(mv.size()) / 2, axis_y + 34, "m");
  svg += svg_text(16, top + cell * static_cast<double>(sv.size()) / 2, "s");
  svg += "</svg>\n";
  return svg;
}

std::string render_scatter_svg(const C0Scatter& c) {
  if (c.points.empty()) throw Error(ErrorCode::kIoFailure, "nothing to plot: empty scatter");
  std::size_t s_hi = 1;
  double r_hi = 0.0;
  for (const auto& p : c.points) {
    s_hi = std::max(s_hi, p.s);
    r_hi = std::max(r_hi, p.ratio);
  }
  if (r_hi <= 0.0) r_hi = 1.0;
  constexpr double left = 60.0, top = 40.0, pw = 480.0, ph = 300.0;
  const double w = left + pw + 20.0;
  const double h = top + ph + 50.0;
  auto px = [&](double s) { return left + pw * (s - 1.0) / std::max(1.0, static_cast<double>(s_hi) - 1.0); };
  auto py = [&](double r) { return top + ph * (1.0 - r / r_hi); };

  std::string svg = svg_open(w, h);
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt_num(w) + "\" height=\"" + fmt_num(h) +
         "\" fill=\"white\"/>\n";
  svg += svg_text(w / 2, 20, "Lower bounds on C0");
  svg += "<rect x=\"" + fmt_num(left) + "\" y=\"" + fmt_num(top) + "\" width=\"" + fmt_num(pw) +
         "\" height=\"" + fmt_num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const auto& p : c.points) {
    svg += "<circle cx=\"" + fmt_num(px(static_cast<double>(p.s))) + "\" cy=\"" +
           fmt_num(py(p.ratio)) + "\" r=\"1.5\" fill=\"steelblue\"/>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double r = r_hi * k / 4.0;
    svg += svg_text(left - 6, py(r) + 4, fmt_num(r), "end");
  }
  const std::size_t sstep = std::max<std::size_t>(1, s_hi / 8);
  for (std::size_t s = 1; s <= s_hi; s += sstep) {
    svg += svg_text(px(static_cast<double>(s)), top + ph + 14, std::to_string(s));
  }
  svg += svg_text(left + pw / 2, top + ph + 34, "s");
  svg += svg_text(16, top + ph / 2, "C0 bound", "middle",
                  " transform=\"rotate(-90 16 " + fmt_num(top + ph / 2) + ")\"");
  svg += "</svg>\n";
  return svg;
}

void emit_plot(const PhaseDiagram& d, const std::filesystem::path& path) {
  write_text_file(path, render_heatmap_svg(d));
}

void emit_plot(const C0Scatter& c, const std::filesystem::path& path) {
  write_text_file(path, render_scatter_svg(c));
}

}  // namespace qcs
