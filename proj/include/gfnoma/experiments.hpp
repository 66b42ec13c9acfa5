#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfnoma/cnn.hpp"
#include "gfnoma/config.hpp"
#include "gfnoma/metrics.hpp"
#include "gfnoma/threshold.hpp"

namespace gfnoma {

// true_rate < 0: the per-packet rate is drawn uniformly on [0, p_max];
// otherwise every packet uses the pinned rate.
struct ActivitySpec {
  double true_rate = -1.0;
};

struct DetectorEval {
  std::string name;
  ConfusionCounts counts;
  BerCounter ber;
  int frames = 0;
};

// Per-frame sparse-recovery bookkeeping (iteration counts, final residuals,
// fallback/divergence flags), emitted when diagnostics are enabled.
struct CsDiagRow {
  uint64_t point_index = 0;
  int frame = 0;
  std::string algorithm;
  int iterations = 0;
  double relative_residual = 0.0;
  bool flagged = false;
};

// Runs every requested detector plus MMSE demodulation over eval_frames
// Monte Carlo frames at one operating point. point_index keys the RNG
// streams so sweep points are independent and order-insensitive.
std::vector<DetectorEval> evaluate_point(const ExperimentConfig& cfg, double gamma_db,
                                         const ActivitySpec& activity,
                                         const std::vector<std::string>& detectors,
                                         const CnnModel* model, uint64_t point_index,
                                         std::vector<CsDiagRow>* cs_diag = nullptr);

// Shard layout of the sample containers written by gen-data.
std::vector<std::string> shard_paths(const ExperimentConfig& cfg, const std::string& split);

struct GenDataSummary {
  int shards_written = 0;
  int shards_skipped = 0;
  uint64_t bytes_estimate = 0;
};

GenDataSummary generate_datasets(const ExperimentConfig& cfg, bool verbose);

// Loads and concatenates all shards of a split, checking fingerprints.
Dataset load_split(const ExperimentConfig& cfg, const std::string& split);

// Training entry point used by the CLI: builds or resumes state, trains,
// writes checkpoint and log CSV. Returns the log rows written.
std::vector<TrainLogRow> train_from_config(const ExperimentConfig& cfg,
                                           const std::string& checkpoint_path,
                                           const std::string& log_path,
                                           const std::optional<std::string>& resume_from);

void run_sweep_snr(const ExperimentConfig& cfg, const CnnModel* model,
                   const std::string& csv_path);
void run_sweep_activity(const ExperimentConfig& cfg, const CnnModel* model,
                        const std::string& csv_path);
void run_table_metrics(const ExperimentConfig& cfg, const CnnModel* model,
                       const std::string& csv_path);

struct ThresholdAnalysisSummary {
  int rows = 0;
  double max_argmin_gap = 0.0;       // |closed form - grid argmin|, tau* inside the grid
  double min_second_difference = 0.0;
  int convexity_violations = 0;      // grid points with second difference < -1e-9
};

ThresholdAnalysisSummary run_threshold_analysis(const ExperimentConfig& cfg,
                                                const std::string& report_csv,
                                                const std::string& curves_csv);

// AMP row-energy cutoff minimizing the activity error rate on labeled
// calibration scores (deterministic sweep over score midpoints).
double calibrate_amp_cutoff(const std::vector<std::pair<double, bool>>& scored_labels);

}  // namespace gfnoma
