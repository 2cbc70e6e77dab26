#pragma once

#include "oswm/common.hpp"
#include "oswm/rng.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace oswm {

enum class ActionKind { Discrete, Box };

struct EnvSpec {
  std::string id;
  int obs_dim = 0;
  ActionKind action_kind = ActionKind::Discrete;
  int n_actions = 0;  // discrete
  Vecd action_low, action_high;
  Vecd obs_low, obs_high;  // documented sampling bounds
  int horizon = 0;
  std::vector<bool> integer_dims;
  // Pure predicate over an observation; applied to model predictions as well.
  std::function<bool(const Vecd&)> terminated;

  int action_dim() const {
    return action_kind == ActionKind::Discrete ? 1 : static_cast<int>(action_low.size());
  }
};

struct StepResult {
  Vecd next_state;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
};

class Env {
 public:
  virtual ~Env() = default;
  virtual const EnvSpec& spec() const = 0;
  virtual Vecd reset(RngStream& rng) = 0;
  // Discrete actions arrive as the integer index in slot 0.
  virtual StepResult step(const Vecd& action) = 0;

  // Test and analysis hooks: drop the environment into a given internal state
  // (step counter cleared).
  virtual void set_state(const Vecd& state) = 0;
  virtual Vecd state() const = 0;

  Vecd random_action(RngStream& rng) const;
};

std::unique_ptr<Env> make_env(const std::string& id);
std::vector<std::string> registered_env_ids();

// R_solved = R_max - (R_max - R_random) * 0.03
double solved_threshold(double r_max, double r_random);

// Batched stepping interface shared by real environments and the learned
// simulator: episodes auto-reset, with the pre-reset observation reported for
// bootstrapping.
struct VecStep {
  Matd obs;     // (n, obs_dim) next (or freshly reset) observations
  Vecd reward;  // (n)
  std::vector<bool> terminated, truncated;
  Matd final_obs;  // valid for rows where terminated || truncated
};

class SimBatch {
 public:
  virtual ~SimBatch() = default;
  virtual const EnvSpec& spec() const = 0;
  virtual int size() const = 0;
  virtual Matd reset_all(std::uint64_t seed) = 0;
  // Steps envs where active[i] (all when active == nullptr); inactive rows are
  // carried over untouched with reward 0 and no episode end.
  virtual VecStep step(const Matd& actions, const std::vector<bool>* active = nullptr) = 0;
};

class RealVecEnv : public SimBatch {
 public:
  RealVecEnv(const std::string& env_id, int n);
  const EnvSpec& spec() const override { return envs_[0]->spec(); }
  int size() const override { return static_cast<int>(envs_.size()); }
  Matd reset_all(std::uint64_t seed) override;
  VecStep step(const Matd& actions, const std::vector<bool>* active = nullptr) override;

 private:
  std::vector<std::unique_ptr<Env>> envs_;
  std::vector<RngStream> rngs_;
  std::vector<int> counts_;
  Matd obs_;
};

// Applies each incoming action k times, summing rewards and stopping early on
// episode end.
class ActionRepeatBatch : public SimBatch {
 public:
  ActionRepeatBatch(std::unique_ptr<SimBatch> inner, int k);
  const EnvSpec& spec() const override { return inner_->spec(); }
  int size() const override { return inner_->size(); }
  Matd reset_all(std::uint64_t seed) override;
  VecStep step(const Matd& actions, const std::vector<bool>* active = nullptr) override;

 private:
  std::unique_ptr<SimBatch> inner_;
  int k_;
  Matd obs_;
};

}  // namespace oswm
