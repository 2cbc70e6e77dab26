#pragma once

#include "oswm/agent.hpp"
#include "oswm/common.hpp"
#include "oswm/envs.hpp"
#include "oswm/wm_env.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oswm {

// Context-generation strategies. `repeat` holds each random action for three
// steps; `mixture` partitions the steps into thirds in the order
// random -> p_expert -> expert.
enum class StrategyKind { Random, Repeat, Expert, PExpert, Mixture };

struct Strategy {
  StrategyKind kind = StrategyKind::Random;
  int repeat_k = 3;
  double p_expert = 0.5;
  const PolicyNet* expert = nullptr;  // required for Expert/PExpert/Mixture

  static Strategy parse(const std::string& name, const PolicyNet* expert = nullptr);
  std::string name() const;
  bool needs_expert() const {
    return kind == StrategyKind::Expert || kind == StrategyKind::PExpert ||
           kind == StrategyKind::Mixture;
  }
};

std::vector<std::string> strategy_names();

// K transitions from the real environment under the strategy's action law.
std::vector<Transition> generate_context(Env& env, const Strategy& strategy, int k,
                                         std::uint64_t seed);

ContextBuffer context_buffer(Env& env, const Strategy& strategy, int k, std::uint64_t seed,
                             int d_s_max, int d_a_max);

// Held-out evaluation set: 500 transitions at each of 0%, 50% and 100% action
// randomness, subsampled from 5000 collected per level with a solved-level
// expert policy.
struct ProxySet {
  std::vector<Transition> transitions;  // 1500 rows
  std::vector<double> randomness;       // provenance tag per row
};

ProxySet build_proxy_set(Env& env, const PolicyNet& expert, std::uint64_t seed,
                         int per_level = 500, int collected_per_level = 5000);

// MSE between model predictions and the proxy targets in the context buffer's
// normalized space, active dims only. Returns NaN (rather than throwing) when
// a degenerate context drives the model to non-finite outputs.
double proxy_loss(const PFNModel<float>& model, const ContextBuffer& context,
                  const ProxySet& proxy);

}  // namespace oswm
