#pragma once

#include "oswm/common.hpp"
#include "oswm/config.hpp"
#include "oswm/envs.hpp"
#include "oswm/model.hpp"  // ParamStore
#include "oswm/rng.hpp"

#include <memory>
#include <string>
#include <vector>

namespace oswm {

// Actor-critic MLP pair (tanh hidden layers, orthogonal init). Discrete
// actions use a categorical head; continuous actions a state-independent-std
// diagonal Gaussian squashed through tanh onto the action box.
class PolicyNet {
 public:
  PolicyNet(const EnvSpec& spec, const std::vector<int>& hidden);

  void init_params(std::uint64_t seed);

  ParamStore<double>& params() { return params_; }
  const ParamStore<double>& params() const { return params_; }

  int obs_dim() const { return obs_dim_; }
  ActionKind action_kind() const { return kind_; }
  int action_dim() const { return kind_ == ActionKind::Discrete ? 1 : act_dim_; }

  // Policy head outputs: logits (n, n_actions) or means (n, act_dim).
  Matd policy_head(const Matd& obs) const;
  Vecd values(const Matd& obs) const;

  struct ActionSample {
    Matd env_action;  // what the environment receives
    Matd raw;         // categorical: index; box: pre-squash gaussian draw u
    Vecd log_prob;
    Vecd value;
  };
  ActionSample act(const Matd& obs, RngStream& rng, bool deterministic) const;

  // Log-density of previously sampled raw actions under the current params.
  Vecd log_prob(const Matd& obs, const Matd& raw) const;

  void save(const std::string& dir, const std::string& env_id) const;
  static PolicyNet load(const std::string& dir);
  const std::string& env_id() const { return env_id_; }
  void set_env_id(const std::string& id) { env_id_ = id; }

  // Squash u onto the action box.
  Matd squash(const Matd& u) const;

 private:
  friend class PPO;
  int obs_dim_ = 0;
  ActionKind kind_ = ActionKind::Discrete;
  int n_actions_ = 0;
  int act_dim_ = 0;
  Vecd act_low_, act_high_;
  std::vector<int> hidden_;
  std::string env_id_;
  ParamStore<double> params_;
};

// Standard recursive generalized advantage estimation. values has one extra
// trailing entry: the bootstrap value of the state after the last step.
Vecd gae(const Vecd& rewards, const Vecd& values, const std::vector<bool>& dones, double gamma,
         double lambda);

struct EvalPoint {
  long step = 0;
  double mean_return = 0.0;
  double std_return = 0.0;
};

struct EvalReport {
  std::vector<EvalPoint> points;
  long best_step = -1;
  double best_mean = 0.0;
};

struct EvalStats {
  double mean = 0.0;
  double stddev = 0.0;
};

EvalStats evaluate(const PolicyNet& policy, Env& env, int n_episodes, std::uint64_t seed,
                   bool deterministic = true);

struct PPOResult {
  std::unique_ptr<PolicyNet> final_policy;
  std::unique_ptr<PolicyNet> best_policy;  // early-stopping selection
  EvalReport report;
};

// Clipped-surrogate PPO with GAE on any batched simulator. The policy is
// evaluated on eval_env every cfg.eval_every_steps interactions (10 episodes,
// deterministic actions) and the best checkpoint is retained.
class PPO {
 public:
  PPO(const PPOConfig& cfg, std::uint64_t seed);

  PPOResult train(SimBatch& env, long total_steps, Env& eval_env);

  // One PPO minibatch loss plus its parameter gradient; exposed for the
  // finite-difference check.
  struct Batch {
    Matd obs;
    Matd raw_actions;
    Vecd old_log_prob;
    Vecd advantages;
    Vecd returns;
  };
  static double loss_and_grad(PolicyNet& policy, const Batch& batch, const PPOConfig& cfg);

 private:
  PPOConfig cfg_;
  std::uint64_t seed_;
};

void save_eval_report(const EvalReport& report, const std::string& path);

}  // namespace oswm
