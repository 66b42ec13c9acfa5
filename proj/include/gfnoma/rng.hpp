#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace gfnoma {

// Every randomized component derives its own engine from
// (master seed, stream tag, stream index). Frames, shards and sweep points
// therefore get independent reproducible streams no matter in which order
// (or on how many threads) they are generated.
enum class Stream : uint32_t {
  kSpreading = 1,
  kActivity = 2,
  kChannel = 3,
  kSymbols = 4,
  kNoise = 5,
  kWeightInit = 6,
  kShuffle = 7,
  kCalibration = 8,
  kExperiment = 9,
};

inline std::mt19937_64 make_rng(uint64_t seed, Stream tag, uint64_t index = 0) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(tag),  static_cast<uint32_t>(index),
                    static_cast<uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Circularly symmetric complex Gaussian with E|z|^2 = var.
inline std::complex<double> sample_cgauss(std::mt19937_64& rng, double var) {
  std::normal_distribution<double> n(0.0, std::sqrt(var / 2.0));
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace gfnoma
