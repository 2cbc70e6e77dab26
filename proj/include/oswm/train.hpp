#pragma once

#include "oswm/common.hpp"
#include "oswm/config.hpp"
#include "oswm/model.hpp"
#include "oswm/prior.hpp"
#include "oswm/rng.hpp"

#include <functional>
#include <string>
#include <utility>

namespace oswm {

// Draws a context cut-off from [min, max-1]: index i in [0, max-min-1] has
// unnormalized weight 1 / ((max-min) - i)^q, so longer contexts are favored
// for q > 0 and q = 0 is uniform.
int sample_eval_position(int min_pos, int max_pos, double q, RngStream& rng);

// Analytic weights of the sampler (normalized), for distribution tests.
Vecd eval_position_probs(int min_pos, int max_pos, double q);

// Mean squared error over query rows restricted to active target dims.
// mask is (rows, y_dim) with 1 for counted entries; the mean divides by the
// number of active entries. Returns the loss and d(loss)/d(pred).
template <class S>
std::pair<S, TMat<S>> mse_loss_and_grad(const TMat<S>& pred, const TMat<S>& target,
                                        const TMat<S>& mask);

double training_loss(const TMat<float>& pred, const TMat<float>& target, const TMat<float>& mask);

// Linear warm-up over the first warmup_steps, cosine decay to zero afterward.
double lr_schedule(double base_lr, long step, long warmup_steps, long total_steps);

// Decoupled-weight-decay Adam on the flat parameter vector.
struct AdamW {
  Vecf m, v;
  long t = 0;

  void init(Eigen::Index n) {
    m.setZero(n);
    v.setZero(n);
    t = 0;
  }
  void step(VecX<float>& params, const VecX<float>& grad, double lr, const TrainConfig& cfg);

  void save(const std::string& path) const;
  bool load(const std::string& path);
};

struct TrainProgress {
  long global_step = 0;
  int epoch = 0;  // completed epochs
};

struct TrainResult {
  int epochs_completed = 0;
  long steps_completed = 0;
  double final_loss = 0.0;
  std::string checkpoint_dir;  // final epoch checkpoint
};

// Runs the full training loop: sample a prior batch, draw a cut-off, predict
// the query targets, MSE, AdamW update. Emits loss.csv (step, epoch, lr,
// loss), per-epoch checkpoints and a `latest` checkpoint with optimizer state
// for resuming. Fully reproducible from (configs, seed).
class Trainer {
 public:
  Trainer(ModelConfig model_cfg, TrainConfig train_cfg, PriorConfig prior_cfg, std::uint64_t seed);

  // progress_cb, if set, is called after every optimizer step.
  TrainResult run(const std::string& out_dir, bool resume = false,
                  std::function<void(const TrainProgress&, double loss)> progress_cb = {});

  PFNModel<float>& model() { return model_; }

 private:
  ModelConfig model_cfg_;
  TrainConfig train_cfg_;
  PriorConfig prior_cfg_;
  std::uint64_t seed_;
  PFNModel<float> model_;
};

// Stacks a TransitionBatch into model inputs (float, row-major) plus the
// per-row active-dim mask for the query region.
struct StackedBatch {
  TMat<float> X, Y;       // (B*T, ...)
  TMat<float> q_target;   // (B*m, y_dim)
  TMat<float> q_mask;     // (B*m, y_dim)
};
StackedBatch stack_batch(const TransitionBatch& batch, int eval_pos);

// Loss of predicting every query target dim by the context mean of that dim;
// the trained model must beat this on held-out batches.
double context_mean_baseline_loss(const PriorConfig& prior_cfg, const TrainConfig& train_cfg,
                                  int n_batches, std::uint64_t seed);

// Held-out model loss under the same batch/eval-position distribution.
double model_heldout_loss(PFNModel<float>& model, const PriorConfig& prior_cfg,
                          const TrainConfig& train_cfg, int n_batches, std::uint64_t seed);

}  // namespace oswm
