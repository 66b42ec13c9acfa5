#pragma once

#include <cstdint>
#include <vector>

#include "gfnoma/simulator.hpp"

namespace gfnoma {

// Per-device and aggregate activity-decision tallies over a campaign.
struct ConfusionCounts {
  std::vector<int64_t> tp, fp, tn, fn;

  explicit ConfusionCounts(int device_count = 0);
  void add_frame(const ActivityVector& estimate, const ActivityVector& truth);
  void merge(const ConfusionCounts& other);

  int device_count() const { return static_cast<int>(tp.size()); }
  int64_t total() const;
  int64_t total_tp() const;
  int64_t total_fp() const;
  int64_t total_tn() const;
  int64_t total_fn() const;
};

// Fraction of wrong per-device activity decisions: (FP + FN) / total.
double aer(const ConfusionCounts& counts);

struct PrF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool flagged = false;  // a zero denominator was reported as 0
};

PrF1 precision_recall_f1(int64_t tp, int64_t fp, int64_t fn);
PrF1 precision_recall_f1(const ConfusionCounts& counts);              // aggregate
PrF1 precision_recall_f1(const ConfusionCounts& counts, int device);  // per device

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};

// Wilson score interval for a binomial rate.
WilsonInterval wilson_interval(int64_t successes, int64_t trials, double z = 1.96);

// How bits of devices the activity detector got wrong enter the BER.
// kMissAsErrors charges a missed device's whole packet as errors;
// kDetectedOnly restricts the denominator to detected active devices.
// False-alarmed silent devices never enter the BER; they are logged.
enum class BerAccounting { kMissAsErrors, kDetectedOnly };

struct BerCounter {
  BerAccounting mode = BerAccounting::kMissAsErrors;
  int64_t bit_errors = 0;
  int64_t bits_total = 0;
  int64_t false_alarm_bits = 0;

  void add_device_packet(bool truly_active, bool declared_active, int bits_per_packet,
                         int errors_when_detected);
  void merge(const BerCounter& other);

  bool defined() const { return bits_total > 0; }
  double ber() const;
};

}  // namespace gfnoma
