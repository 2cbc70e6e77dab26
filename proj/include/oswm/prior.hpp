#pragma once

#include "oswm/common.hpp"
#include "oswm/config.hpp"
#include "oswm/rng.hpp"

#include <vector>

namespace oswm {

enum class Activation { Sin, Tanh, Relu, Sigmoid };

Activation activation_from_string(const std::string& name);
double apply_activation(Activation a, double x);

// Randomly initialized, untrained network driving one synthetic state
// dimension: configurable hidden stack ending in a scalar output, which is
// then scaled and offset.
struct NNDimSpec {
  int in_dim = 0;
  std::vector<Matd> hidden_w;   // layer j: (width_j, width_{j-1}); layer 0: (width_0, in_dim)
  std::vector<Vecd> hidden_b;   // empty vectors when bias is off
  RowX<double> out_w;           // (1, width_last)
  double out_b = 0.0;
  std::vector<Activation> activations;  // one per hidden layer
  bool use_bias = false;
  bool use_layer_norm = true;
  bool use_residual = true;
  double scale = 1.0;
  double offset = 0.0;
};

// prev_state must already contain the momentum outputs; the vector fed to the
// network is [prev_state, action].
double nn_dim_step(const NNDimSpec& spec, const Vecd& prev_state, const Vecd& action);

enum class MomentumMode { Linear, Angular };
enum class PosEncoding { Raw, Sine, Cosine, SineCosine };
enum class BoundaryBehavior { None, ElasticReflect, InelasticReflect };

// Physics-style velocity/position recurrence:
//   v' = v + a*dt - g*dt,  p' = p + v'*dt
// Angular positions are reported modulo 2*pi before encoding. Linear units may
// reflect (elastic) or stop (inelastic) at symmetric walls +-bound; angular
// units may carry inelastic hard stops [stop_lo, stop_hi] inside one turn.
struct MomentumUnit {
  double position = 0.0;
  double velocity = 0.0;
  double dt = 0.1;
  double gravity = 0.0;
  MomentumMode mode = MomentumMode::Linear;
  PosEncoding encoding = PosEncoding::Raw;
  BoundaryBehavior boundary = BoundaryBehavior::None;
  double bound = 0.0;    // linear: symmetric walls at +-bound
  double stop_lo = 0.0;  // angular hard stops
  double stop_hi = 0.0;
  int action_index = 0;

  int output_width() const { return (encoding == PosEncoding::SineCosine ? 2 : 1) + 1; }
  // Encoded position dims followed by the velocity dim.
  void write_outputs(double* dst) const;
};

MomentumUnit momentum_step(const MomentumUnit& unit, double action);

struct RewardHead {
  bool constant_one = false;
  bool include_prev_state = false;
  NNDimSpec net;
};

double reward_eval(const RewardHead& head, const Vecd& next_state, const Vecd& action,
                   const Vecd& prev_state);

// One sampled synthetic environment. State layout (before batch permutation):
// [NN dims..., momentum unit outputs...].
struct PriorEnvInstance {
  int d_s_max = 0;  // padded maxima carried from the sampling config
  int d_a_max = 0;
  int d_s = 0;
  int d_a = 0;
  int n_nn = 0;
  std::vector<NNDimSpec> nn_dims;
  std::vector<MomentumUnit> momentum_units;  // templates; live copies are reset per segment
  RewardHead reward;
  int reset_interval = 100;
  std::vector<int> state_perm;   // permutation of the d_s active state dims
  std::vector<int> action_perm;  // permutation of the d_a active action dims

  int momentum_width() const;
};

PriorEnvInstance sample_prior_env(const PriorConfig& config, RngStream& rng);

struct RawRollout {
  Matd X;  // (T, d_s + d_a)
  Matd Y;  // (T, d_s + 1)
  std::vector<int> reset_steps;
};

RawRollout rollout_prior(const PriorEnvInstance& instance, int T, RngStream& rng);

// Padded, permuted, per-sequence-normalized training batch.
struct TransitionBatch {
  int d_s_max = 0;
  int d_a_max = 0;
  std::vector<Matd> X;  // (T, d_s_max + d_a_max) each
  std::vector<Matd> Y;  // (T, d_s_max + 1) each
  std::vector<int> d_s, d_a;
  std::vector<std::vector<int>> state_perm, action_perm;
  std::vector<Vecd> x_mean, x_std, y_mean, y_std;  // stats in the padded layout
  bool normalized = false;

  int batch() const { return static_cast<int>(X.size()); }
  int seq_len() const { return batch() ? static_cast<int>(X[0].rows()) : 0; }
  // 1 for dimensions the loss should see (active states + reward), 0 for padding.
  Vecd active_y_mask(int b) const;
};

// Dimensions with near-zero spread are floored to this std so constant
// dimensions normalize to zero instead of dividing by zero.
constexpr double kStdFloor = 1e-8;

TransitionBatch assemble_batch(const std::vector<PriorEnvInstance>& instances, int T,
                               RngStream& rng, bool normalize = true);

// Convenience: sample instances, roll them out and assemble in one call.
TransitionBatch sample_batch(const PriorConfig& config, int batch_size, int T, RngStream& rng,
                             bool normalize = true);

}  // namespace oswm
