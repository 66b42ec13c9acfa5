#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfnoma/cnn.hpp"
#include "gfnoma/cs_baselines.hpp"
#include "gfnoma/metrics.hpp"
#include "gfnoma/simulator.hpp"
#include "gfnoma/threshold.hpp"

namespace gfnoma {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemConfig {
  int devices = 16;
  int spreading_factor = 16;
  int antennas = 8;
  int symbols_per_packet = 8;
  double p_max = 0.1;
  std::vector<double> group_powers = {1.0};
  std::vector<int> device_group;  // empty: everyone in group 0

  PowerProfile power_profile() const;
};

struct DatasetConfig {
  int samples = 25000;
  double train_fraction = 0.8;
  double val_fraction = 0.1;
  double test_fraction = 0.1;
  int shard_size = 5000;
  double gamma_db = 10.0;
};

struct ThresholdDetConfig {
  double assumed_pa = -1.0;  // negative: use p_max / 2
  StatConvention convention = StatConvention::kRealPart;
  bool majority = true;
  int combining_count = 0;

  double effective_pa(double p_max) const {
    return assumed_pa < 0.0 ? p_max / 2.0 : assumed_pa;
  }
  CombiningRule rule() const {
    return majority ? CombiningRule::majority() : CombiningRule::count_threshold(combining_count);
  }
};

struct DetectorsConfig {
  std::vector<std::string> enabled = {"threshold", "omp", "amp", "cnn", "oracle"};
  ThresholdDetConfig threshold;
  CsConfig cs;
  // nominal: AMP declares the top-N devices with N from the nominal rate
  // (the rate-assumption handicap of non-learning baselines). cutoff: score
  // thresholding, optionally calibrated on labeled frames.
  bool amp_support_nominal = true;
  bool amp_calibrate = true;
  // per-frame sparse-recovery diagnostics CSV alongside sweep outputs
  bool cs_diagnostics = false;
};

struct SweepConfig {
  std::vector<double> snr_grid_db = {0.0, 5.0, 10.0, 15.0};
  std::vector<double> activity_grid = {0.02, 0.05, 0.1, 0.15, 0.2};
  double eval_gamma_db = 10.0;
  int eval_frames = 2000;
  int calibration_frames = 400;
};

struct ThresholdAnalysisConfig {
  std::vector<int> device_counts = {1, 4};
  int spreading_factor = 16;
  int antennas = 1;
  int symbols_per_packet = 8;
  std::vector<double> gamma_grid_db = {5.0, 10.0};
  int frames = 4000;
  int tau_grid_points = 1000;
};

struct ExperimentConfig {
  uint64_t seed = 1;
  std::string out_dir = "out";
  SystemConfig system;
  DatasetConfig dataset;
  TrainConfig train;
  DetectorsConfig detectors;
  SweepConfig sweep;
  ThresholdAnalysisConfig threshold_analysis;
  BerAccounting ber_accounting = BerAccounting::kMissAsErrors;

  void validate() const;
  // Canonical serialization of everything that defines the experiment;
  // seed and out_dir are stamped separately so reruns under a new seed are
  // comparable.
  std::string canonical() const;
  uint64_t hash() const;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace gfnoma
