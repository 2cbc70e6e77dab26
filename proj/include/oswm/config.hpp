#pragma once

#include "oswm/common.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oswm {

using json = nlohmann::json;

// Synthetic-environment prior. Defaults are the optimized configuration the
// released results were produced with; `search_ranges()` widens scale/offset
// to the original search intervals instead of the fixed finals.
struct PriorConfig {
  int d_s_max = 11;
  int d_a_max = 2;
  int reset_interval = 100;
  double dt = 0.1;
  std::vector<double> gravity_set = {0.0, 9.8};
  std::array<double, 2> scale_range = {18.14, 18.14};
  std::array<double, 2> offset_range = {3.28, 3.28};

  // Per-dimension dynamics networks.
  int nn_hidden_layers = 1;
  int nn_hidden_width = 16;
  bool nn_bias = false;
  bool nn_layer_norm = true;
  bool nn_residual = true;
  std::vector<std::string> nn_activations = {"sin", "tanh"};

  // Momentum units: reflective boundary half-width range for linear units.
  std::array<double, 2> momentum_bound_range = {3.0, 8.0};
  int max_momentum_units = 2;

  // Prior state dims are NN-driven only (momentum units disabled).
  bool nn_only = false;

  static PriorConfig search_ranges();
  // Older three-linear-layer dynamics networks (wider activation pool, no
  // layer norm); kept behind this switch.
  static PriorConfig three_layer_variant();

  void validate() const;
  json to_json() const;
  static PriorConfig from_json(const json& j, const std::string& path = "prior");
};

struct CoderConfig {
  int width = 512;
  int depth = 3;
  std::string activation = "gelu";
  bool bias = true;
  bool residual = true;

  json to_json() const;
  static CoderConfig from_json(const json& j, const std::string& path);
};

struct ModelConfig {
  int d_s_max = 11;
  int d_a_max = 2;
  int seq_len = 1001;
  int d_model = 512;
  int n_heads = 4;
  int d_ff = 1024;
  int n_layers = 6;
  CoderConfig encoder{512, 3, "gelu", true, true};
  CoderConfig decoder{64, 2, "sigmoid", false, true};

  int x_dim() const { return d_s_max + d_a_max; }
  int y_dim() const { return d_s_max + 1; }
  int head_dim() const { return d_model / n_heads; }

  void validate() const;
  json to_json() const;
  static ModelConfig from_json(const json& j, const std::string& path = "model");

  // Stable hash of the architecture; checkpoints refuse to load when the
  // stored fingerprint differs.
  std::uint64_t fingerprint() const;

  // Small configuration for fast tests.
  static ModelConfig toy();
};

struct TrainConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  double weight_decay = 0.0;
  double learning_rate = 5e-5;
  int batch_size = 8;
  int epochs = 50;
  int steps_per_epoch = 100;
  int warmup_epochs = 12;
  int seq_len = 1001;
  int eval_pos_min = 500;
  int eval_pos_max = 1000;
  double eval_pos_q = 0.4;
  double grad_clip_norm = 1.0;  // 0 disables clipping
  int checkpoint_every = 1;     // epochs

  void validate() const;
  json to_json() const;
  static TrainConfig from_json(const json& j, const std::string& path = "train");
};

// Reference defaults of the PPO implementation used for the published runs.
struct PPOConfig {
  double learning_rate = 3e-4;
  int rollout_steps = 2048;  // total across parallel envs
  int n_envs = 1;
  int minibatch_size = 64;
  int update_epochs = 10;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double clip_range = 0.2;
  double entropy_coef = 0.0;
  double value_coef = 0.5;
  double max_grad_norm = 0.5;
  double adam_eps = 1e-5;
  std::vector<int> hidden_sizes = {64, 64};
  int eval_every_steps = 100;  // real-env evaluation cadence, in env interactions
  int eval_episodes = 10;

  void validate() const;
  json to_json() const;
  static PPOConfig from_json(const json& j, const std::string& path = "agent");
};

// Helpers shared by config parsing: required-key access with path-qualified
// error messages.
const json& require_key(const json& j, const std::string& key, const std::string& path);

template <class T>
T get_or(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

std::string canonical_dump(const json& j);

}  // namespace oswm
