#include "lagrangian/random.hpp"

#include <cmath>

namespace lagrangian {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

std::vector<double> Rng::dirichlet(std::size_t n) {
  std::vector<double> x(n);
  double sum = 0;
  for (auto& v : x) {
    v = -std::log1p(-uniform());  // Exp(1)
    sum += v;
  }
  if (sum <= 0) {
    x.assign(n, 1.0 / static_cast<double>(n));
    return x;
  }
  for (auto& v : x) v /= sum;
  return x;
}

}  // namespace lagrangian
