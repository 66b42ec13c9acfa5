#pragma once

#include <armadillo>
#include <vector>

#include "gfnoma/metrics.hpp"
#include "gfnoma/simulator.hpp"

namespace gfnoma {

// Symbol estimates for the devices declared active, one row per support
// member in the given order.
struct MudResult {
  std::vector<int> support;
  arma::cx_mat soft;  // linear estimator output, |S| x Ns
  arma::mat bits;     // BPSK decisions in {-1,+1}; exact zero slices to +1
};

// Linear MMSE on the antenna-stacked system restricted to the support:
//   x_hat = (A^H A + noise_var * diag(1/P))^{-1} A^H y  per symbol slot.
// noise_var = 0 falls back to the pseudo-inverse (zero forcing).
MudResult mmse_detect(const std::vector<arma::cx_mat>& received,
                      const std::vector<arma::cx_mat>& phi, const std::vector<int>& support,
                      double noise_var, const PowerProfile& powers);

// Folds one frame's detection outcome into the BER tally under the counter's
// accounting mode.
void accumulate_frame_ber(BerCounter& counter, const MudResult& mud, const PacketFrame& frame);

}  // namespace gfnoma
