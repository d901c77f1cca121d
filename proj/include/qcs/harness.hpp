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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcs/random.hpp"
#include "qcs/solver.hpp"

namespace qcs {

enum class SparsityRule { kHalfM, kExplicit };

/// Recovery-experiment configuration. JSON keys match the field names;
/// scalar_mode is "quaternion" or "real", s_rule is "1..m/2" or "explicit".
struct ExperimentConfig {
  std::size_t n = 256;
  std::vector<std::size_t> m_values{32};
  SparsityRule s_rule = SparsityRule::kHalfM;
  std::vector<std::size_t> s_values;  // used with kExplicit
  std::size_t trials = 1000;
  std::uint64_t base_seed = 0;
  ScalarMode scalar_mode = ScalarMode::kQuaternion;
  double perfect_threshold = 1e-7;
  double eta = 0.0;
  SolverParams solver;
  std::string output;           // directory; empty keeps results in memory
  bool record_timing = false;   // wall times break byte-identical reruns
  std::size_t workers = 0;      // 0: QCS_WORKERS or hardware concurrency
  std::size_t s_max = 64;       // C0 experiment
  std::size_t ratio_dim = 8;    // ratio test signal length

  /// Throws InvalidConfig.
  void validate() const;

  /// (m, s) cells in sweep order: m ascending as listed, then s ascending.
  std::vector<std::pair<std::size_t, std::size_t>> cells() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);

/// The full published grid: m = 2..64, s = 1..m/2, 1000 trials per cell.
ExperimentConfig full_profile();

std::string_view mode_name(ScalarMode mode);
ScalarMode parse_mode(std::string_view text);

struct TrialRecord {
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  double err_l1 = 0.0;
  double err_l2 = 0.0;
  bool perfect = false;
  std::string status;  // solver status or "Error"
  int iterations = 0;
  bool polished = false;
  std::optional<double> wall_seconds;
};

nlohmann::json trial_to_json(const TrialRecord& r);
TrialRecord trial_from_json(const nlohmann::json& j);

/// Stream for one trial; depends on (mode, n, m, s, trial_index) only.
std::uint64_t trial_stream_id(ScalarMode mode, std::size_t n, std::size_t m, std::size_t s,
                              std::size_t trial_index);

/// Samples Phi (variance 1/m), an s-sparse x and y = Phi x + e, solves, and
/// scores the reconstruction. Solver exceptions become status "Error".
TrialRecord run_trial(const ExperimentConfig& config, std::size_t m, std::size_t s,
                      std::size_t trial_index);

struct PhaseCell {
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t trials = 0;
  std::size_t perfect = 0;
  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(perfect) / trials; }
};

struct PhaseDiagram {
  std::vector<PhaseCell> cells;
  nlohmann::json config;

  const PhaseCell* find(std::size_t m, std::size_t s) const;
};

nlohmann::json diagram_to_json(const PhaseDiagram& d);
PhaseDiagram diagram_from_json(const nlohmann::json& j);
std::string diagram_to_csv(const PhaseDiagram& d);

/// Runs every (m, s) cell. With an output directory, trial records are
/// appended to trials.jsonl cell by cell (completed trials found there are
/// not rerun) and summary.json / diagram.csv are written at the end.
PhaseDiagram run_sweep(const ExperimentConfig& config);

struct C0Point {
  std::size_t trial = 0;
  std::size_t s = 0;
  double ratio = 0.0;  // ||x# - x||_1 / ||x - x_s||_1
};

struct C0Scatter {
  std::vector<C0Point> points;
  std::vector<double> max_by_s;  // index s - 1
  std::size_t skipped = 0;       // ||x - x_s||_1 < 1e-12
};

/// One Gaussian Phi (variance 1/m), `trials` dense N_H(0,1) signals,
/// exact data; lower bounds on C0 for s = 1..s_max.
C0Scatter run_c0_experiment(const ExperimentConfig& config);

nlohmann::json c0_to_json(const C0Scatter& c);
C0Scatter c0_from_json(const nlohmann::json& j);

struct RatioStats {
  std::size_t m = 0;
  std::size_t samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  double gamma_shape = 0.0;  // 2m (quaternion) or m/2 (real)
  double gamma_rate = 0.0;
  double ks_distance_to_gamma = 0.0;
};

/// Distribution of ||Phi x||^2 / ||x||^2 for a fixed x and fresh Gaussian Phi
/// with variance 1/m. The reference law is Gamma(2m, 2m) for quaternions and
/// Gamma(m/2, m/2) for real matrices. Throws InvalidConfig when samples < 1000.
RatioStats run_ratio_test(std::size_t m, std::size_t samples, ScalarMode mode,
                          std::uint64_t seed, std::size_t dim = 8);

nlohmann::json ratio_to_json(const RatioStats& r);

/// Kolmogorov-Smirnov distance between the sample and Gamma(shape, rate).
double ks_distance_gamma(std::vector<double> sample, double shape, double rate);

/// SVG heatmap over (m, s); grey level is the perfect-recovery rate.
std::string render_heatmap_svg(const PhaseDiagram& d);
/// SVG scatter of the C0 lower bounds against s.
std::string render_scatter_svg(const C0Scatter& c);

/// Writes the SVG; throws IoFailure for empty data or unwritable paths.
void emit_plot(const PhaseDiagram& d, const std::filesystem::path& path);
void emit_plot(const C0Scatter& c, const std::filesystem::path& path);

}  // namespace qcs
