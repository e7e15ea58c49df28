#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "tsallis/linalg.hpp"

namespace tsallis {

// Counter-keyed random stream: the state is a pure function of
// (seed, purpose tag, index), so any case can be regenerated in isolation.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view tag, std::uint64_t index);

  double uniform() { return unit_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi);
  double normal() { return normal_(engine_); }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  Matrix gaussian(Index rows, Index cols);
  // Haar-distributed orthogonal matrix (QR of a Gaussian with sign fix).
  Matrix orthogonal(Index n);

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t mix_key(std::uint64_t seed, std::string_view tag,
                      std::uint64_t index);

}  // namespace tsallis
