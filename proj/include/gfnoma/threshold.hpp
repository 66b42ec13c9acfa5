#pragma once

#include <armadillo>
#include <cstdint>
#include <vector>

#include "gfnoma/frontend.hpp"
#include "gfnoma/simulator.hpp"

namespace gfnoma {

// Gaussian tail probability P(Z > x).
double q_function(double x);

// Which scalar the per-symbol decision is taken on. The despread statistic is
// complex with a real signal component; RealPart thresholds |Re| (default,
// matches the two-tail Gaussian analysis exactly), Magnitude thresholds the
// complex modulus (Gaussian analysis is then an approximation).
enum class StatConvention { kRealPart, kMagnitude };

// Gaussian model of one despread symbol of one device at one antenna:
// mean mu when active, zero when silent, sigma for the decision statistic
// under the chosen convention, and the activity rate assumed by the detector.
struct SymbolStatParams {
  double mu = 0.0;
  double sigma = 0.0;
  double pa = 0.0;
};

// Variance of multi-user interference plus noise in the raw (unit-power)
// despread statistic of device k at antenna m:
//   sum_{i != k} |g_mk^* g_mi c_k^T c_i|^2 * pa  +  |g_mk|^2 * Nc * noise_var.
double interference_variance(const ChannelState& channel, const SpreadingMatrix& codes,
                             int k, int m, double pa);

// Full per-(device, antenna) statistic model for the power-normalized tensor,
// including group powers and the convention-dependent sigma.
SymbolStatParams symbol_stats(const ChannelState& channel, const SpreadingMatrix& codes,
                              const PowerProfile& powers, int k, int m, double pa,
                              StatConvention convention);

// Per-symbol activity decision error probability at threshold tau:
//   2(1-pa) Q(tau/sigma) + pa Q((mu-tau)/sigma).
double error_probability(double tau, const SymbolStatParams& params);

// Minimizer of error_probability, clamped to [0, inf):
//   tau* = mu/2 + (sigma^2/mu) ln(2(1-pa)/pa).
double optimal_threshold(const SymbolStatParams& params);

// votes(k, j, m) = 1 iff the decision statistic of entry (m,k,j) exceeds
// taus(k, m).
arma::ucube detect_symbolwise(const DecorrelatedTensor& tensor, const arma::mat& taus,
                              StatConvention convention);

struct CombiningRule {
  enum class Mode { kMajority, kCountThreshold };
  Mode mode = Mode::kMajority;
  int count = 0;  // used by kCountThreshold

  static CombiningRule majority() { return {Mode::kMajority, 0}; }
  static CombiningRule count_threshold(int n) { return {Mode::kCountThreshold, n}; }
};

// Device declared active iff its votes across all M*Ns (antenna, symbol)
// pairs reach the rule's count; majority uses ceil(M*Ns/2).
ActivityVector combine_votes(const arma::ucube& votes, const CombiningRule& rule);

// One-stop detector: derives per-(k,m) thresholds from CSI and runs the
// symbolwise decisions plus combining on a frame's tensor.
struct ThresholdDetector {
  double assumed_pa = 0.05;
  StatConvention convention = StatConvention::kRealPart;
  CombiningRule rule = CombiningRule::majority();

  arma::mat thresholds(const ChannelState& channel, const SpreadingMatrix& codes,
                       const PowerProfile& powers) const;  // K x M
  ActivityVector detect(const DecorrelatedTensor& tensor, const ChannelState& channel,
                        const SpreadingMatrix& codes, const PowerProfile& powers) const;
};

// Validation harness: Monte Carlo per-symbol error rates at a chosen
// threshold against the analytic prediction, per (device, antenna).
struct PeConfig {
  int device_count = 4;
  int spreading_factor = 16;
  int antennas = 1;
  int symbols_per_packet = 8;
  double gamma_db = 10.0;
  double assumed_pa = 0.05;   // also the fixed true rate of the Monte Carlo
  double tau_scale = 1.0;     // threshold = tau_scale * tau*
  int frames = 2000;
  uint64_t seed = 1;
  StatConvention convention = StatConvention::kRealPart;
};

struct PeRow {
  int k = 0;
  int m = 0;
  double mu = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
  double pe_analytic = 0.0;
  double pe_empirical = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  int64_t decisions = 0;
  int64_t errors = 0;
  // False-alarm bookkeeping on silent symbols, both tail conventions.
  double fa_one_sided = 0.0;
  double fa_two_sided = 0.0;
  double fa_one_pred = 0.0;
  double fa_two_pred = 0.0;
  double miss_empirical = 0.0;
  double miss_pred = 0.0;
  int64_t silent_decisions = 0;
  int64_t active_decisions = 0;
};

struct PeReport {
  std::vector<PeRow> rows;
  double pooled_analytic = 0.0;
  double pooled_empirical = 0.0;
  int64_t pooled_decisions = 0;
  int64_t pooled_errors = 0;
};

PeReport analytic_vs_empirical_pe(const PeConfig& cfg);

}  // namespace gfnoma
