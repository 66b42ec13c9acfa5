#pragma once

#include <armadillo>
#include <complex>
#include <vector>

#include "gfnoma/simulator.hpp"

namespace gfnoma {

// Power-normalized stack of per-antenna decorrelator outputs. Slice m is the
// K x Ns matrix diag(1/P) * Phi_m^H * Y_m; storage order is
// (antenna, device, symbol).
struct DecorrelatedTensor {
  std::vector<arma::cx_mat> slices;

  int antennas() const { return static_cast<int>(slices.size()); }
  int device_count() const { return slices.empty() ? 0 : static_cast<int>(slices[0].n_rows); }
  int symbols_per_packet() const {
    return slices.empty() ? 0 : static_cast<int>(slices[0].n_cols);
  }

  // Entry (m, k, j): the j-th despread symbol of device k at antenna m.
  std::complex<double> at(int m, int k, int j) const;
};

// Matched-filter bank: projects the received chips onto every device's
// effective signature.
arma::cx_mat decorrelate(const arma::cx_mat& received, const arma::cx_mat& phi);

// Applies the per-device 1/P power normalization and stacks all antennas.
DecorrelatedTensor stack_tensor(const std::vector<arma::cx_mat>& decorrelated,
                                const PowerProfile& powers);

// Decorrelates every antenna of a frame and stacks the result.
DecorrelatedTensor frame_to_tensor(const PacketFrame& frame, const SpreadingMatrix& codes,
                                   const PowerProfile& powers);

}  // namespace gfnoma
