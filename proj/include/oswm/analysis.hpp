#pragma once

#include "oswm/common.hpp"
#include "oswm/config.hpp"
#include "oswm/prior.hpp"
#include "oswm/wm_env.hpp"

#include <string>
#include <vector>

namespace oswm {

struct Histogram {
  double lo = 0.0, hi = 1.0;
  std::vector<long> counts;

  long total() const;
  int occupied() const;
  double bin_center(int i) const;
};

Histogram make_histogram(const std::vector<double>& values, int bins);

// Distribution archetype predicates over a histogram. Thresholds:
//   peaked:     more than 50% of the mass inside 5 adjacent bins
//   wide:       no single bin holds more than 5% of the mass
//   multimodal: two modes (each carrying at least 5% of the mass) separated
//               by a valley at least 30% below the smaller mode
//   sparse:     at most 5 occupied bins
struct ArchetypeFlags {
  bool peaked = false;
  bool wide = false;
  bool multimodal = false;
  bool sparse = false;

  // Label precedence: multimodal, then peaked, then wide, else other.
  std::string nn_label() const;
  // Momentum flavor: multimodal, then sparse, then broad, else other.
  std::string momentum_label() const;
};

ArchetypeFlags classify(const Histogram& hist);

struct PriorDimHistogram {
  int env_index = 0;
  int dim_index = 0;
  std::string kind;  // "nn" | "momentum_pos" | "momentum_vel"
  Histogram hist;
  ArchetypeFlags flags;
};

// Rolls out n_envs sampled prior environments and histograms every state
// dimension over its own min/max range.
std::vector<PriorDimHistogram> prior_histograms(const PriorConfig& config, int n_envs, int bins,
                                                int rollout_len, std::uint64_t seed);

void write_prior_histograms(const std::vector<PriorDimHistogram>& hists, const std::string& dir,
                            int per_dim_files_for_first_n_envs = 8);

// Reward landscapes: mean reward binned over the angular-position-like key of
// each environment (next state for the 1-D line env, grid cells with explicit
// action labels for the grid).
struct LandscapeRow {
  double center = 0.0;
  double mean_key = 0.0;
  double mean_reward = 0.0;  // NaN marks an empty bin
  long count = 0;
};

struct GridLandscapeRow {
  int x = 0, y = 0, action = 0;
  double reward = 0.0;
};

struct LandscapeResult {
  std::string env_id;
  std::string source;  // "real" | "oswm"
  std::vector<LandscapeRow> rows;
  std::vector<GridLandscapeRow> grid;  // gridworld only
  long samples = 0;
};

// sim == nullptr evaluates the real environment; otherwise rewards come from
// the learned simulator.
LandscapeResult reward_landscape(const std::string& env_id, WorldModelSim* sim,
                                 std::uint64_t seed, int n_samples = 1000);

void write_landscape_csv(const LandscapeResult& result, const std::string& path);

}  // namespace oswm
