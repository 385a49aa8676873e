#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace attnattack {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Deterministic PRNG used everywhere randomness is needed.
///
/// The generator is std::mt19937_64 (algorithm fixed by the C++ standard) and
/// the uint64 -> double mapping below is hand-rolled so that streams are
/// reproducible across standard library implementations. All shuffles go
/// through this class; std::shuffle and std::uniform_*_distribution are
/// deliberately avoided because their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1): top 53 bits of the generator output.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Modulo reduction; the tiny bias is
  /// irrelevant here, determinism is what matters.
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::uniform_int: n must be positive");
    return static_cast<int>(gen_() % static_cast<std::uint64_t>(n));
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = uniform_int(i + 1);
      std::swap(v[i], v[static_cast<size_t>(j)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// Glorot-style range for uniform(-r, r) initialization.
inline double init_range(int fan_in, int fan_out) {
  return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

/// Fill a matrix with uniform(-r, r) draws in row-major coefficient order.
inline void init_uniform(Mat& m, double r, Rng& rng) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-r, r);
}

inline void init_uniform(Vec& v, double r, Rng& rng) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.uniform(-r, r);
}

}  // namespace attnattack
