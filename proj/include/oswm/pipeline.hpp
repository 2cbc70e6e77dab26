#pragma once

#include "oswm/agent.hpp"
#include "oswm/config.hpp"
#include "oswm/wm_env.hpp"

#include <memory>
#include <string>
#include <vector>

namespace oswm {

// Multi-seed agent training on either the real environment or the learned
// simulator; shared by the CLI and the acceptance suite.
struct AgentRunSpec {
  std::string env_id;
  bool real = false;
  const PFNModel<float>* model = nullptr;  // learned-simulator runs
  const ContextBuffer* context = nullptr;  // frozen context for the run
  long steps = 50000;
  int action_repeat = 1;
  std::vector<int> seeds = {0, 1, 2};
  PPOConfig ppo;
  int final_eval_episodes = 100;
  std::string out_dir;  // when non-empty: eval curves, policies, summary.csv
};

struct AgentSeedResult {
  int seed = 0;
  long best_step = -1;
  double best_eval_mean = 0.0;  // 10-episode early-stopping series maximum
  EvalStats final_det;          // best checkpoint over final_eval_episodes episodes
  EvalStats final_stoch;
  std::string policy_dir;
};

std::vector<AgentSeedResult> run_agent_training(const AgentRunSpec& spec);

// CLI entry points; each returns a process exit code.
int cli_collect_context(const json& cfg, const std::string& env_id, const std::string& strategy,
                        int k, const std::string& expert_path, std::uint64_t seed,
                        const std::string& out);
int cli_train_agent(const json& cfg, const std::string& env_id, const std::string& model_dir,
                    const std::string& context_dir, bool real, long steps,
                    const std::string& seeds, int action_repeat_k, std::uint64_t seed,
                    const std::string& out);
int cli_evaluate(const std::string& env_id, const std::string& policy_path, int episodes,
                 bool random_baseline, bool stochastic, std::uint64_t seed);
int cli_eval_context(const json& cfg, const std::string& envs, const std::string& model_dir,
                     const std::string& experts_dir, std::uint64_t seed, const std::string& out);
int cli_analyze_prior(const json& cfg, int n_envs, int bins, int rollout_len, std::uint64_t seed,
                      const std::string& out);
int cli_analyze_reward(const std::string& env_id, const std::string& source,
                       const std::string& model_dir, const std::string& context_dir,
                       std::uint64_t seed, const std::string& out);
int cli_dump_prior(const json& cfg, int batch, int seq_len, std::uint64_t seed,
                   const std::string& out);

// Executes the staged pipeline described by a config file. Stages: train,
// collect-context, train-agent, evaluate, analyze.
int run_pipeline(const std::string& config_path, std::uint64_t seed_override,
                 const std::string& out_override);

// Random-policy baseline, shared by evaluate and the acceptance suite.
EvalStats random_baseline(const std::string& env_id, int episodes, std::uint64_t seed);

// Trains a PPO expert on the real environment until the early-stopping series
// reaches the solved threshold (or the step budget runs out); returns the
// best policy.
std::unique_ptr<PolicyNet> train_expert(const std::string& env_id, long max_steps,
                                        std::uint64_t seed, double* achieved = nullptr);

}  // namespace oswm
