#pragma once

#include "oswm/common.hpp"
#include "oswm/config.hpp"
#include "oswm/rng.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace oswm {

// Flat parameter/gradient storage with named matrix views. Keeping everything
// in one contiguous vector makes the optimizer and finite-difference checks
// trivial; views are (in, out) shaped so activations multiply as rows * W.
template <class S>
class ParamStore {
 public:
  struct Entry {
    std::string name;
    Eigen::Index rows, cols, offset;
  };

  void add(const std::string& name, Eigen::Index rows, Eigen::Index cols) {
    index_[name] = entries_.size();
    entries_.push_back({name, rows, cols, total_});
    total_ += rows * cols;
  }

  void finalize() {
    data_.setZero(total_);
    grad_.setZero(total_);
  }

  Eigen::Map<MatX<S>> view(const std::string& name) {
    const Entry& e = entry(name);
    return {data_.data() + e.offset, e.rows, e.cols};
  }
  Eigen::Map<const MatX<S>> view(const std::string& name) const {
    const Entry& e = entry(name);
    return {data_.data() + e.offset, e.rows, e.cols};
  }
  Eigen::Map<const MatX<S>> cview(const std::string& name) const {
    const Entry& e = entry(name);
    return {data_.data() + e.offset, e.rows, e.cols};
  }
  Eigen::Map<MatX<S>> grad_view(const std::string& name) {
    const Entry& e = entry(name);
    return {grad_.data() + e.offset, e.rows, e.cols};
  }

  const Entry& entry(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown parameter: " + name);
    return entries_[it->second];
  }

  const std::vector<Entry>& entries() const { return entries_; }
  Eigen::Index size() const { return total_; }
  VecX<S>& data() { return data_; }
  const VecX<S>& data() const { return data_; }
  VecX<S>& grad() { return grad_; }
  const VecX<S>& grad() const { return grad_; }
  void zero_grad() { grad_.setZero(); }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  Eigen::Index total_ = 0;
  VecX<S> data_, grad_;
};

// Per-layer context keys/values for a frozen context; lets environment steps
// run only the query token through the network.
template <class S>
struct ContextCache {
  int context_len = 0;
  std::vector<TMat<S>> k;  // per layer: (K, d_model)
  std::vector<TMat<S>> v;
};

// Transformer world model in the prior-fitted-network style: split encoders
// for the state/action (and next-state/reward) slices, masked self-attention
// separating context from queries, split decoder for next state and reward.
//
// Sequences are stacked row-wise: row b*T + t is step t of sequence b. The
// attention mask is implied by eval_pos: rows [0, e) of each sequence form the
// context block (attending among themselves), rows [e, T) are queries that
// attend to the context plus themselves only. No positional information is
// added anywhere; a context is an unordered set of transitions.
template <class S>
class PFNModel {
 public:
  explicit PFNModel(const ModelConfig& config);

  const ModelConfig& config() const { return cfg_; }
  ParamStore<S>& params() { return params_; }
  const ParamStore<S>& params() const { return params_; }

  // Scaled-normal initialization (scheme "init-v1"): every weight matrix
  // ~ N(0, 1/fan_in), biases and layer-norm offsets zero, gains one.
  void init_params(std::uint64_t seed);

  static const char* init_version() { return "init-v1"; }

  // Token embeddings before the transformer stack: context rows receive the
  // encoded input plus the encoded target, query rows the encoded input only.
  TMat<S> token_embeddings(const TMat<S>& X, const TMat<S>& Y, int B, int T, int eval_pos) const;

  // Training forward. X: (B*T, x_dim), Y: (B*T, y_dim), both normalized.
  // Returns predictions for query rows, stacked: (B*(T-e), y_dim).
  const TMat<S>& forward(const TMat<S>& X, const TMat<S>& Y, int B, int T, int eval_pos);

  // Accumulates parameter gradients for the last forward call.
  void backward(const TMat<S>& d_pred);

  void zero_grad() { params_.zero_grad(); }

  // Inference: precompute per-layer context keys/values from a normalized
  // context block, then answer independent queries against it.
  ContextCache<S> build_context(const TMat<S>& Xc, const TMat<S>& Yc) const;
  TMat<S> forward_queries(const ContextCache<S>& cache, const TMat<S>& Xq) const;

 private:
  struct Workspace;  // forward caches for backward

  ModelConfig cfg_;
  ParamStore<S> params_;
  std::shared_ptr<Workspace> ws_;
};

// Exact learnable-scalar count for a configuration.
std::int64_t count_params(const ModelConfig& config);

struct CheckpointInfo {
  std::uint64_t seed = 0;
  int epoch = 0;
  std::string init_version;
  ModelConfig config;
};

// Checkpoint container: <dir>/model.json manifest plus <dir>/params.bin raw
// little-endian float32 blobs, indexed by tensor name.
void save_checkpoint(const std::string& dir, const PFNModel<float>& model, std::uint64_t seed,
                     int epoch);
CheckpointInfo load_checkpoint(const std::string& dir, PFNModel<float>& model);
CheckpointInfo read_checkpoint_info(const std::string& dir);

}  // namespace oswm
