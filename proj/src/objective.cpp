#include "lagrangian/objective.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagrangian {

namespace {

// Levels larger than this are summed pairwise to bound rounding growth.
constexpr std::size_t kPairwiseThreshold = 10000;

void require_length(const Hypergraph& h, std::size_t size) {
  if (size != static_cast<std::size_t>(h.order()))
    throw InputError("weight vector has " + std::to_string(size) + " entries, expected " +
                     std::to_string(h.order()));
}

template <class S>
S monomial(std::span<const Vertex> e, std::span<const S> x) {
  S p(1);
  for (Vertex v : e) p *= x[v - 1];
  return p;
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= 128) {
    double s = 0;
    for (double t : terms) s += t;
    return s;
  }
  const auto half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

double level_sum(std::span<const Edge> edges, std::span<const double> x) {
  if (edges.size() > kPairwiseThreshold) {
    std::vector<double> terms;
    terms.reserve(edges.size());
    for (const auto& e : edges) terms.push_back(monomial<double>(e, x));
    return pairwise_sum(terms);
  }
  double s = 0;
  for (const auto& e : edges) s += monomial<double>(e, x);
  return s;
}

double factorial_double(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

bool is_member(const Edge& e, Vertex v) { return std::binary_search(e.begin(), e.end(), v); }

Rational alpha_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw InputError("coefficient must be a number or a \"p/q\" string");
}

}  // namespace

Coefficients to_double(const ExactCoefficients& exact) {
  std::map<int, double> alpha;
  for (const auto& [r, a] : exact.alphas()) alpha[r] = to_double(a);
  return Coefficients(exact.base_type(), std::move(alpha));
}

Coefficients unit_coefficients(const Hypergraph& h) {
  const auto types = h.edge_types();
  if (types.empty()) return Coefficients(1);
  std::map<int, double> alpha;
  for (int r : types) alpha[r] = 1.0;
  return Coefficients(types.front(), std::move(alpha));
}

ExactCoefficients lambda_prime_coefficients(std::span<const int> types) {
  if (types.empty()) return ExactCoefficients(1);
  const int base = *std::min_element(types.begin(), types.end());
  const Integer base_fact = factorial(base);
  std::map<int, Rational> alpha;
  for (int r : types) alpha[r] = Rational(factorial(r), base_fact);
  return ExactCoefficients(base, std::move(alpha));
}

ExactCoefficients exact_coefficients_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r0") || !j["r0"].is_number_integer())
    throw InputError("coefficients JSON needs an integer \"r0\"");
  std::map<int, Rational> alpha;
  if (j.contains("alpha")) {
    if (!j["alpha"].is_object()) throw InputError("\"alpha\" must be an object keyed by edge type");
    for (const auto& [key, value] : j["alpha"].items()) {
      int r = 0;
      try {
        std::size_t used = 0;
        r = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError("coefficient key '" + key + "' is not an edge type");
      }
      alpha[r] = alpha_from_json(value);
    }
  }
  return ExactCoefficients(j["r0"].get<int>(), std::move(alpha));
}

Coefficients coefficients_from_json(const nlohmann::json& j) { return to_double(exact_coefficients_from_json(j)); }

nlohmann::json to_json(const ExactCoefficients& c) {
  nlohmann::json alpha = nlohmann::json::object();
  for (const auto& [r, a] : c.alphas()) alpha[std::to_string(r)] = to_string(a);
  return {{"r0", c.base_type()}, {"alpha", alpha}};
}

WeightVector::WeightVector(std::vector<double> x) : x_(std::move(x)) {
  if (x_.empty()) throw InputError("weight vector must be nonempty");
  double sum = 0;
  for (double v : x_) {
    if (!(v >= 0) || !std::isfinite(v)) throw InputError("weights must be finite and nonnegative");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) throw InputError("weights must sum to 1");
}

WeightVector WeightVector::uniform_on(int n, std::span<const Vertex> subset) {
  if (subset.empty()) throw InputError("uniform weighting needs a nonempty vertex set");
  std::vector<double> x(n, 0.0);
  for (Vertex v : subset) {
    if (v < 1 || v > n) throw InputError("vertex " + std::to_string(v) + " out of range");
    x[v - 1] = 1.0 / static_cast<double>(subset.size());
  }
  return WeightVector(std::move(x));
}

RationalWeightVector::RationalWeightVector(std::vector<Rational> x) : x_(std::move(x)) {
  if (x_.empty()) throw InputError("weight vector must be nonempty");
  Rational sum = 0;
  for (const auto& v : x_) {
    if (v < 0) throw InputError("weights must be nonnegative");
    sum += v;
  }
  if (sum != 1) throw InputError("exact weights must sum to exactly 1");
}

RationalWeightVector RationalWeightVector::uniform_on(int n, std::span<const Vertex> subset) {
  if (subset.empty()) throw InputError("uniform weighting needs a nonempty vertex set");
  std::vector<Rational> x(n, Rational(0));
  const Rational w(1, static_cast<long long>(subset.size()));
  for (Vertex v : subset) {
    if (v < 1 || v > n) throw InputError("vertex " + std::to_string(v) + " out of range");
    x[v - 1] = w;
  }
  return RationalWeightVector(std::move(x));
}

std::vector<double> RationalWeightVector::approximate() const {
  std::vector<double> out;
  out.reserve(x_.size());
  for (const auto& v : x_) out.push_back(to_double(v));
  return out;
}

double eval_L(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x) {
  alpha.require_covers(h);
  require_length(h, x.size());
  double total = 0;
  for (const auto& [r, edges] : h.levels()) total += alpha(r) * level_sum(edges, x);
  return total;
}

double eval_level(const Hypergraph& h, int r, std::span<const double> x) {
  require_length(h, x.size());
  return level_sum(h.edges(r), x);
}

double eval_lambda_prime(const Hypergraph& h, std::span<const double> x) {
  require_length(h, x.size());
  double total = 0;
  for (const auto& [r, edges] : h.levels()) total += factorial_double(r) * level_sum(edges, x);
  return total;
}

std::vector<double> gradient(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x) {
  alpha.require_covers(h);
  require_length(h, x.size());
  std::vector<double> g(x.size(), 0.0);
  for (const auto& [r, edges] : h.levels()) {
    const double a = alpha(r);
    for (const auto& e : edges) {
      for (int k = 0; k < r; ++k) {
        double p = a;
        for (int l = 0; l < r; ++l)
          if (l != k) p *= x[e[l] - 1];
        g[e[k] - 1] += p;
      }
    }
  }
  return g;
}

PairQuantities pair_quantities(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x,
                               Vertex i, Vertex j) {
  alpha.require_covers(h);
  require_length(h, x.size());
  if (i == j) throw InputError("pair quantities need distinct vertices");
  if (i < 1 || j < 1 || i > h.order() || j > h.order()) throw InputError("pair vertex out of range");

  PairQuantities q;
  Edge swapped;
  // Adds alpha * prod(e - {from}) when (e - {from}) + {to} is not an edge.
  auto one_sided = [&](const Edge& e, double a, Vertex from, Vertex to) {
    double p = a;
    swapped.clear();
    for (Vertex v : e) {
      if (v == from) continue;
      p *= x[v - 1];
      swapped.push_back(v);
    }
    swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), to), to);
    return h.contains(swapped) ? 0.0 : p;
  };

  for (const auto& [r, edges] : h.levels()) {
    const double a = alpha(r);
    for (const auto& e : edges) {
      const bool has_i = is_member(e, i);
      const bool has_j = is_member(e, j);
      if (has_i && has_j) {
        double p = a;
        for (Vertex v : e)
          if (v != i && v != j) p *= x[v - 1];
        q.joint += p;
      } else if (has_i) {
        q.i_only += one_sided(e, a, i, j);
      } else if (has_j) {
        q.j_only += one_sided(e, a, j, i);
      }
    }
  }
  return q;
}

Rational eval_exact(const Hypergraph& h, const ExactCoefficients& alpha, std::span<const Rational> x) {
  alpha.require_covers(h);
  require_length(h, x.size());
  Rational total = 0;
  for (const auto& [r, edges] : h.levels()) {
    Rational level = 0;
    for (const auto& e : edges) level += monomial<Rational>(e, x);
    total += alpha(r) * level;
  }
  return total;
}

}  // namespace lagrangian
