#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace lagrangian {

inline constexpr std::uint64_t kDefaultSeed = 20150917;

/// Seeded generator with distributions written out by hand, so a seed yields
/// the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  /// Dirichlet(1, ..., 1), i.e. uniform on the simplex.
  std::vector<double> dirichlet(std::size_t n);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lagrangian
