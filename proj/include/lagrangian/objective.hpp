#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "lagrangian/error.hpp"
#include "lagrangian/hypergraph.hpp"
#include "lagrangian/rational.hpp"

namespace lagrangian {

/// Level weights of the polynomial program
///   L(H, x) = sum_{e in E^{r0}} prod x + sum_{r != r0} alpha_r sum_{e in E^r} prod x,
/// with the base level's coefficient fixed to 1. Coverage of T(H) is checked
/// when the coefficients are used, so one value can serve many graphs.
template <class Scalar>
class BasicCoefficients {
 public:
  explicit BasicCoefficients(int base_type, std::map<int, Scalar> alpha = {})
      : base_(base_type), alpha_(std::move(alpha)) {
    if (base_ < 1) throw InputError("base edge type must be positive");
    for (auto it = alpha_.begin(); it != alpha_.end();) {
      if (it->first < 1) throw InputError("coefficient keys must be positive edge types");
      if (!(it->second > 0)) throw InputError("coefficients must be positive");
      if (it->first == base_) {
        if (it->second != Scalar(1)) throw InputError("the base level's coefficient is fixed to 1");
        it = alpha_.erase(it);
      } else {
        ++it;
      }
    }
  }

  int base_type() const noexcept { return base_; }
  const std::map<int, Scalar>& alphas() const noexcept { return alpha_; }

  std::optional<Scalar> find(int r) const {
    if (r == base_) return Scalar(1);
    if (auto it = alpha_.find(r); it != alpha_.end()) return it->second;
    return std::nullopt;
  }

  Scalar operator()(int r) const {
    if (auto a = find(r)) return *a;
    throw MissingCoefficient("no coefficient for edge type " + std::to_string(r));
  }

  /// Throws MissingCoefficient if some nonempty level of H has no weight.
  void require_covers(const Hypergraph& h) const {
    for (int r : h.edge_types()) {
      if (r < base_)
        throw MissingCoefficient("edge type " + std::to_string(r) + " is below the base type " +
                                 std::to_string(base_));
      (void)(*this)(r);
    }
  }

 private:
  int base_;
  std::map<int, Scalar> alpha_;
};

using Coefficients = BasicCoefficients<double>;
using ExactCoefficients = BasicCoefficients<Rational>;

Coefficients to_double(const ExactCoefficients& exact);

/// Every level of H weighted 1, based at min T(H) (1 for an empty graph).
/// This is the plain edge-monomial sum.
Coefficients unit_coefficients(const Hypergraph& h);

/// alpha_r = r!/r0! with r0 = min(types), so that r0! * L equals lambda'.
ExactCoefficients lambda_prime_coefficients(std::span<const int> types);

/// `{"r0": 2, "alpha": {"3": 1.0}}`; alpha values may be numbers or "p/q" strings.
ExactCoefficients exact_coefficients_from_json(const nlohmann::json& j);
Coefficients coefficients_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExactCoefficients& c);

/// A point of the standard simplex: nonnegative entries summing to 1 within 1e-12.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit WeightVector(std::vector<double> x);

  /// 1/|S| on the vertices of S, 0 elsewhere.
  static WeightVector uniform_on(int n, std::span<const Vertex> subset);

  std::span<const double> values() const noexcept { return x_; }
  operator std::span<const double>() const noexcept { return x_; }
  double operator[](std::size_t i) const { return x_[i]; }
  std::size_t size() const noexcept { return x_.size(); }

 private:
  std::vector<double> x_;
};

/// Exact point of the simplex.
class RationalWeightVector {
 public:
  explicit RationalWeightVector(std::vector<Rational> x);
  static RationalWeightVector uniform_on(int n, std::span<const Vertex> subset);

  std::span<const Rational> values() const noexcept { return x_; }
  operator std::span<const Rational>() const noexcept { return x_; }
  std::size_t size() const noexcept { return x_.size(); }
  std::vector<double> approximate() const;

 private:
  std::vector<Rational> x_;
};

/// L(H, x). `x` has one entry per vertex (x[v-1] is the weight of v); it need
/// not lie on the simplex, so finite differences can use it directly.
double eval_L(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x);

/// Sum of the r-edge monomials alone.
double eval_level(const Hypergraph& h, int r, std::span<const double> x);

/// lambda'(H, x) = sum_r r! * (sum of r-edge monomials), computed directly.
double eval_lambda_prime(const Hypergraph& h, std::span<const double> x);

/// dL/dx_i = sum over edges e containing i of alpha_|e| * prod_{v in e, v != i} x_v.
std::vector<double> gradient(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x);

/// Link evaluations for a vertex pair:
///   joint  = L(E_ij, x), the mixed partial d^2 L / dx_i dx_j;
///   i_only = L(E_{i\j}, x), from (r-1)-sets A with A+i an edge and A+j not;
///   j_only = L(E_{j\i}, x).
/// They satisfy grad_i - grad_j = (x_j - x_i) * joint + i_only - j_only.
struct PairQuantities {
  double joint = 0;
  double i_only = 0;
  double j_only = 0;
};

PairQuantities pair_quantities(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x,
                               Vertex i, Vertex j);

/// Exact L(H, x) over the rationals.
Rational eval_exact(const Hypergraph& h, const ExactCoefficients& alpha, std::span<const Rational> x);

}  // namespace lagrangian
