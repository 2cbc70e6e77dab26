#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oswm {

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VecX = Eigen::Vector<Scalar, Eigen::Dynamic>;
template <class Scalar>
using RowX = Eigen::RowVector<Scalar, Eigen::Dynamic>;

// Token-major matrices (one row per token/sample): row-major storage so that
// per-row softmax/layer-norm passes touch contiguous memory.
template <class Scalar>
using TMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Matd = MatX<double>;
using Vecd = VecX<double>;
using Matf = MatX<float>;
using Vecf = VecX<float>;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// FNV-1a over a string; used for architecture fingerprints and config hashes.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[v & 0xF];
    v >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

}  // namespace oswm
