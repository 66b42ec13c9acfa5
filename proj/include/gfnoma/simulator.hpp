#pragma once

#include <armadillo>
#include <cstdint>
#include <random>
#include <vector>

#include "gfnoma/rng.hpp"

namespace gfnoma {

// K devices share the channel through dedicated length-Nc chip sequences with
// entries in {-1,+1}. Column k identifies device k for a whole experiment.
struct SpreadingMatrix {
  arma::mat codes;  // Nc x K

  int spreading_factor() const { return static_cast<int>(codes.n_rows); }
  int device_count() const { return static_cast<int>(codes.n_cols); }
};

// Devices are partitioned into groups with a common transmit power per group.
// A single unit-power group models the homogeneous network.
struct PowerProfile {
  std::vector<double> group_powers;  // S entries, all > 0
  std::vector<int> assignment;       // device k -> group index

  static PowerProfile homogeneous(int device_count, double power = 1.0);

  int device_count() const { return static_cast<int>(assignment.size()); }
  double device_power(int k) const { return group_powers.at(assignment.at(k)); }
  double total_power() const;
  // diag entries 1/P applied to the decorrelator output of each device
  arma::vec normalizers() const;
  void validate() const;
};

struct ActivityVector {
  std::vector<uint8_t> active;  // length K, entries 0/1
  double true_rate = 0.0;       // realized per-packet transmission probability

  int device_count() const { return static_cast<int>(active.size()); }
  int count_active() const;
};

// K x Ns over {-1,0,+1}: row k is all zero iff device k is silent,
// otherwise BPSK symbols.
struct SymbolFrame {
  arma::mat symbols;

  int device_count() const { return static_cast<int>(symbols.n_rows); }
  int symbols_per_packet() const { return static_cast<int>(symbols.n_cols); }
};

struct ChannelState {
  arma::cx_mat gains;      // M x K, fixed within a frame
  double noise_var = 0.0;  // sigma_w^2, linear

  int antennas() const { return static_cast<int>(gains.n_rows); }
  int device_count() const { return static_cast<int>(gains.n_cols); }
};

struct PacketFrame {
  ActivityVector activity;
  SymbolFrame symbols;
  ChannelState channel;
  std::vector<arma::cx_mat> received;  // M matrices, each Nc x Ns
};

// i.i.d. uniform +-1 chips, reproducible under the seed.
SpreadingMatrix gen_spreading(int device_count, int spreading_factor, uint64_t seed);

// Draws the per-packet rate uniformly on [0, p_max], then activates each
// device independently with that probability.
ActivityVector sample_activity(int device_count, double p_max, std::mt19937_64& rng);

// Same, with the rate pinned (used by rate sweeps and validation harnesses).
ActivityVector sample_activity_fixed_rate(int device_count, double rate, std::mt19937_64& rng);

// Equiprobable BPSK for active devices, zero rows for silent ones.
SymbolFrame sample_symbols(const ActivityVector& activity, int symbols_per_packet,
                           std::mt19937_64& rng);

// Independent flat Rayleigh fading: each coefficient is circularly symmetric
// complex Gaussian with the given variance.
ChannelState sample_channel(int antennas, int device_count, double coeff_var,
                            std::mt19937_64& rng);

// Per-antenna equivalent dictionary: column k of slice m is gains(m,k) * code_k.
std::vector<arma::cx_mat> build_phi(const ChannelState& channel, const SpreadingMatrix& codes);

// Received frame: Y_m = Phi_m * diag(sqrt(P)) * B + W_m with white complex
// Gaussian noise of variance noise_var per entry.
PacketFrame transmit(const SpreadingMatrix& codes, const ChannelState& channel,
                     const ActivityVector& activity, const SymbolFrame& symbols,
                     const PowerProfile& powers, std::mt19937_64& noise_rng);

// sigma_w^2 = sigma_s^2 / 10^(gamma/10) with sigma_s^2 = pa_nominal * total power.
double snr_to_noise_var(double gamma_db, const PowerProfile& powers, double pa_nominal);

}  // namespace gfnoma
