#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gfnoma/frontend.hpp"
#include "gfnoma/simulator.hpp"

namespace gfnoma {

// Network shape. The trunk convolves along the symbol axis per device row
// (channels mix antennas), so device ordering is only consumed by the dense
// head. Hidden sizes follow the fixed two-conv / two-dense stack below.
struct CnnArchitecture {
  int antennas = 0;
  int device_count = 0;
  int symbols_per_packet = 0;
  int conv1_channels = 8;
  int conv2_channels = 16;
  int taps = 3;  // odd
  int hidden = 64;

  int input_channels() const { return 2 * antennas; }
  int input_size() const { return input_channels() * device_count * symbols_per_packet; }
  bool operator==(const CnnArchitecture&) const = default;
};

// Per-channel affine normalization frozen from the training split.
struct ChannelStats {
  std::vector<float> mean;
  std::vector<float> stddev;

  void apply(std::vector<float>& input, int device_count, int symbols_per_packet) const;
};

// Real/imaginary split of the decorrelated tensor: channels 2m and 2m+1 hold
// the real and imaginary planes of antenna slice m.
std::vector<float> tensor_to_input(const DecorrelatedTensor& tensor);
DecorrelatedTensor input_to_tensor(const std::vector<float>& input, int antennas,
                                   int device_count, int symbols_per_packet);

ChannelStats compute_channel_stats(const std::vector<std::vector<float>>& inputs,
                                   const CnnArchitecture& arch);

// dims(x) = (channels, device_count, symbols); flat index ((c*K)+k)*Ns + j.
// All parameters live in one flat vector; layer offsets are derived from the
// architecture. Templated so gradient checks run in double while training
// and checkpoints stay float32.
template <typename T>
class CnnNet {
 public:
  CnnNet() = default;
  explicit CnnNet(const CnnArchitecture& arch);

  const CnnArchitecture& arch() const { return arch_; }
  std::vector<T>& params() { return params_; }
  const std::vector<T>& params() const { return params_; }
  size_t param_count() const { return params_.size(); }

  // fan-in-scaled uniform weights, zero biases
  void init_weights(uint64_t seed);

  struct Workspace {
    std::vector<T> conv1_pre, conv1_post, conv2_pre, conv2_post;
    std::vector<T> pooled, fc1_pre, fc1_post, logits;
  };

  // input must already be standardized; logits land in ws.logits (K).
  void forward(const T* input, Workspace& ws) const;
  // d(loss)/d(logits) in dlogits; parameter gradients are ACCUMULATED into
  // grads (size param_count) and, when grad_input != nullptr, the input
  // gradient is written there.
  void backward(const T* input, const Workspace& ws, const T* dlogits, T* grads,
                T* grad_input = nullptr) const;

  // Slice boundaries of the flat parameter vector, in layout order
  // conv1_w, conv1_b, conv2_w, conv2_b, fc1_w, fc1_b, fc2_w, fc2_b.
  struct Layout {
    size_t conv1_w, conv1_b, conv2_w, conv2_b, fc1_w, fc1_b, fc2_w, fc2_b, total;
  };
  Layout layout() const { return layout_; }

 private:
  CnnArchitecture arch_;
  Layout layout_{};
  std::vector<T> params_;
};

template <typename T>
T logistic(T x) {
  return x >= T(0) ? T(1) / (T(1) + std::exp(-x)) : std::exp(x) / (T(1) + std::exp(x));
}

// Element-wise binary cross-entropy from probabilities, clamped at 1e-7,
// summed over devices and averaged over samples.
double bce_loss(const std::vector<std::vector<double>>& probs,
                const std::vector<std::vector<uint8_t>>& labels);

// Stable per-sample loss and logit gradient used by training:
// sum_k softplus(z_k) - a_k z_k, d/dz = logistic(z) - a (times pos_weight on
// the active class when configured).
template <typename T>
T bce_from_logits(const T* logits, const uint8_t* labels, int device_count, T pos_weight,
                  T* dlogits);

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

template <typename T>
struct AdamState {
  std::vector<T> m, v;
  int64_t step = 0;

  void resize(size_t n) {
    m.assign(n, T(0));
    v.assign(n, T(0));
  }
};

template <typename T>
void adam_step(std::vector<T>& params, const std::vector<T>& grads, AdamState<T>& state,
               const AdamConfig& cfg);

struct TrainConfig {
  AdamConfig adam;
  int batch_size = 64;
  int epochs = 30;
  int patience = 0;  // 0: no early stop
  double pos_weight = 1.0;
  double prob_threshold = 0.5;
  uint64_t seed = 1;
};

struct Sample {
  std::vector<float> input;     // raw (not standardized) channel planes
  std::vector<uint8_t> labels;  // length K
  float true_rate = 0.0f;
};

struct Dataset {
  CnnArchitecture dims;  // conv/hidden fields unused here, shape metadata only
  uint64_t seed = 0;
  uint64_t config_hash = 0;
  std::vector<Sample> samples;
};

struct TrainLogRow {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double val_aer = 0.0;
};

// Everything needed to continue training deterministically.
struct TrainState {
  CnnNet<float> net;
  AdamState<float> adam;
  ChannelStats stats;
  int epochs_done = 0;
  int best_epoch = -1;
  float best_val_loss = 0.0f;
  std::vector<float> best_params;

  static TrainState fresh(const CnnArchitecture& arch, const Dataset& train_split,
                          uint64_t seed);
};

// Mini-batch Adam from state.epochs_done+1 up to cfg.epochs. Per-epoch rows
// are appended to log. Epoch shuffling is keyed on (seed, epoch) and batch
// reductions run over fixed-size chunks, so results do not depend on thread
// count and a resumed run reproduces a straight run bit for bit.
// NaN loss aborts with std::runtime_error.
void run_training(TrainState& state, const Dataset& train_split, const Dataset& val_split,
                  const TrainConfig& cfg, std::vector<TrainLogRow>& log);

// Deployable model: best-validation parameters plus the frozen input stats.
struct CnnModel {
  CnnNet<float> net;
  ChannelStats stats;
  double prob_threshold = 0.5;

  std::vector<double> infer(const DecorrelatedTensor& tensor) const;
  ActivityVector detect(const DecorrelatedTensor& tensor) const;
};

CnnModel best_model(const TrainState& state, double prob_threshold);

// Device k declared active iff probability >= threshold.
ActivityVector hypothesis_test(const std::vector<double>& probs, double threshold);

// Versioned binary checkpoint: architecture, flat float32 parameter and
// optimizer arrays, channel stats, config fingerprint.
void save_checkpoint(const std::string& path, const TrainState& state, uint64_t config_hash,
                     uint64_t seed);
struct Checkpoint {
  TrainState state;
  uint64_t config_hash = 0;
  uint64_t seed = 0;
};
Checkpoint load_checkpoint(const std::string& path);

}  // namespace gfnoma
