#pragma once

#include "oswm/common.hpp"
#include "oswm/envs.hpp"
#include "oswm/model.hpp"
#include "oswm/prior.hpp"  // kStdFloor
#include "oswm/rng.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace oswm {

struct Transition {
  Vecd s, a, s_next;
  double r = 0.0;
  bool terminated = false;
  bool truncated = false;
};

// Real-environment transitions plus the frozen normalization statistics the
// model sees them through. Rows are padded to the model maxima with zeros.
struct ContextBuffer {
  std::string env_id;
  int d_s = 0, d_a = 0;
  int d_s_max = 0, d_a_max = 0;
  Matd X;  // (K, d_s_max + d_a_max)
  Matd Y;  // (K, d_s_max + 1)
  Vecd x_mean, x_std, y_mean, y_std;
  int episodes_spanned = 0;

  int size() const { return static_cast<int>(X.rows()); }

  void fit_stats();

  TMat<float> normalized_x() const;
  TMat<float> normalized_y() const;
  // Single query (state, action) into the model's normalized input layout.
  Vecd normalize_query(const Vecd& s, const Vecd& a) const;
  // Model output back to environment units.
  Vecd denormalize_target(const Vecd& y_hat) const;

  void save(const std::string& dir) const;
  static ContextBuffer load(const std::string& dir);
};

// Chooses the next action during context collection.
using ActionProvider = std::function<Vecd(const Vecd& obs, int step_idx, RngStream& rng)>;

ActionProvider random_actions(const EnvSpec& spec);

ContextBuffer collect_context(Env& env, const ActionProvider& actions, int k, std::uint64_t seed,
                              int d_s_max, int d_a_max);

std::vector<Transition> collect_transitions(Env& env, const ActionProvider& actions, int k,
                                            std::uint64_t seed, int* episodes_spanned = nullptr);

ContextBuffer buffer_from_transitions(const std::vector<Transition>& transitions,
                                      const EnvSpec& spec, int d_s_max, int d_a_max);

// Frozen (model, context) pair answering next-state/reward queries in
// environment units. Shared by the single- and vector-env wrappers.
class WorldModelSim {
 public:
  WorldModelSim(const PFNModel<float>& model, ContextBuffer ctx, const std::string& env_id);

  const EnvSpec& spec() const { return spec_; }
  const ContextBuffer& context() const { return ctx_; }

  struct Prediction {
    Vecd next_state;
    double reward = 0.0;
    bool fault = false;  // non-finite model output
  };
  Prediction predict(const Vecd& s, const Vecd& a) const;
  // Batched: rows of s/a are independent queries.
  std::vector<Prediction> predict_batch(const Matd& s, const Matd& a,
                                        const std::vector<bool>* active = nullptr) const;

  long fault_count() const { return faults_; }

 private:
  Vecd finalize(const Vecd& y_hat, bool* fault) const;

  const PFNModel<float>* model_;
  ContextBuffer ctx_;
  ContextCache<float> cache_;
  EnvSpec spec_;
  std::unique_ptr<Env> proto_env_;  // keeps the spec's predicate alive
  mutable long faults_ = 0;
};

// Learned simulator behind the real environment's interface: resets come from
// the real environment, transitions from the model, termination from the real
// predicate applied to the (unclipped) prediction, truncation from the real
// horizon.
class OSWMEnv : public Env {
 public:
  OSWMEnv(std::shared_ptr<WorldModelSim> sim);

  const EnvSpec& spec() const override { return sim_->spec(); }
  Vecd reset(RngStream& rng) override;
  StepResult step(const Vecd& action) override;
  void set_state(const Vecd& state) override;
  Vecd state() const override { return state_; }

 private:
  std::shared_ptr<WorldModelSim> sim_;
  std::unique_ptr<Env> reset_env_;
  Vecd state_;
  int count_ = 0;
};

// Vectorized learned simulator: all parallel episodes are advanced by one
// batched model query per step.
class OSWMVecEnv : public SimBatch {
 public:
  OSWMVecEnv(std::shared_ptr<WorldModelSim> sim, int n);

  const EnvSpec& spec() const override { return sim_->spec(); }
  int size() const override { return static_cast<int>(reset_envs_.size()); }
  Matd reset_all(std::uint64_t seed) override;
  VecStep step(const Matd& actions, const std::vector<bool>* active = nullptr) override;

 private:
  std::shared_ptr<WorldModelSim> sim_;
  std::vector<std::unique_ptr<Env>> reset_envs_;  // real envs used for reset draws
  std::vector<RngStream> rngs_;
  std::vector<int> counts_;
  Matd obs_;
};

}  // namespace oswm
