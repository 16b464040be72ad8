#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zforce/forcing.hpp"
#include "zforce/metrics.hpp"
#include "zforce/random.hpp"

namespace zforce {

enum class Model { pa, deactivation };

/// "pa" or "deact"; also the tag mixed into derived seeds.
std::string_view to_string(Model model);
/// Accepts "pa", "deact" and "deactivation".
Model parse_model(std::string_view text);

struct MeasureFlags {
  bool zf = true;
  bool vc = true;
  bool diameter = true;
  bool gamma = false;
};

struct ExperimentConfig {
  Model model = Model::pa;
  std::size_t n = 2000;
  std::size_t m = 2;
  std::vector<double> a_grid{0.05, 0.1, 0.2, 0.5, 1.0, 2.0};
  std::size_t replicas = 20;
  Seed master_seed = 1;
  LmMode mode = LmMode::closure_consistent;
  MeasureFlags measure;
  DiameterMethod diameter_method = DiameterMethod::two_sweep;
  std::size_t k_min = 0;  // 0 selects 4 * m for the exponent estimate
  bool timing = true;     // false writes 0 for wall time, keeping CSVs byte-stable
};

/// Desk-scale defaults (n = 2000, 20 replicas).
ExperimentConfig desk_preset(Model model);
/// The full-size sweep: n = 10^4, 100 replicas per grid point.
ExperimentConfig full_preset(Model model);

void validate(const ExperimentConfig& cfg);

/// Parse the flat JSON config; unknown keys are rejected. Missing keys keep defaults.
ExperimentConfig config_from_json(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
std::string config_to_json(const ExperimentConfig& cfg);

struct RunRecord {
  Model model = Model::pa;
  double a = 0.0;
  double gamma_target = 0.0;  // 2 + a
  std::size_t replica = 0;
  Seed seed = 0;
  std::optional<double> z_lm_frac;
  std::optional<double> delta_z_frac;
  std::optional<double> v_lm_frac;
  std::optional<double> delta_v_frac;
  std::optional<double> diameter;
  std::optional<double> gamma_hat;  // not part of the record CSV
  double walltime_ms = 0.0;
};

/// Generate and measure one replica. Verifies every LM output before returning.
RunRecord run_replica(const ExperimentConfig& cfg, std::size_t grid_index, std::size_t replica);

/**
 * All |a_grid| x replicas records, grid-major and replica-minor, regardless
 * of how many worker threads run them. workers == 0 uses the hardware
 * concurrency.
 */
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, std::size_t workers = 0);

struct Stat {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(count)
  std::size_t count = 0;
};

struct SummaryRow {
  Model model = Model::pa;
  double a = 0.0;
  double gamma = 0.0;
  std::size_t replicas = 0;
  std::optional<Stat> z_lm;
  std::optional<Stat> delta_z;
  std::optional<Stat> v_lm;
  std::optional<Stat> delta_v;
  std::optional<Stat> diameter;
  std::optional<Stat> gamma_hat;
};

/// Group by (model, a) in order of first appearance; throws on empty input.
std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records);

struct GammaWindow {
  double lo = 2.0;  // exclusive
  double hi = 2.6;  // inclusive
  bool contains(double gamma) const { return gamma > lo && gamma <= hi; }
};

/// Parses "lo:hi".
GammaWindow parse_window(std::string_view text);

struct ThresholdScalings {
  ScalingFit forcing;  // 1 - mean z  versus  gamma - 2
  ScalingFit cover;    // mean v      versus  gamma - 2
};

/**
 * Fit both near-threshold scalings over the rows whose gamma lies in the
 * window. Rows of other models are ignored when `model` is given; without
 * it the rows must all share one model.
 */
ThresholdScalings fit_threshold_scalings(const std::vector<SummaryRow>& rows, GammaWindow window,
                                 std::optional<Model> model = std::nullopt);

}  // namespace zforce
