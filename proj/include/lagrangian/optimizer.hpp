#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lagrangian/hypergraph.hpp"
#include "lagrangian/objective.hpp"
#include "lagrangian/random.hpp"

namespace lagrangian {

struct SolverConfig {
  int starts = 64;
  int max_iters = 5000;
  double initial_step = 1.0;
  double tol_grad = 1e-9;
  double tol_value = 1e-12;
  double support_epsilon = 1e-10;
  int grid_resolution = 24;
  std::uint64_t seed = kDefaultSeed;

  /// Throws InputError unless every field is positive.
  void validate() const;
};

/// Overrides the fields present in `j` (same names as the struct).
SolverConfig solver_config_from_json(const nlohmann::json& j, SolverConfig base = {});

enum class SolveMethod { multistart, grid, warmstart, combined };

std::string to_string(SolveMethod m);

struct OptimizationResult {
  double value = 0;
  WeightVector x{std::vector<double>{1.0}};
  std::vector<Vertex> support;  // x_v > support_epsilon, ascending
  double kkt_residual = 0;
  SolveMethod method = SolveMethod::multistart;
  int iterations = 0;
  bool converged = false;
  std::vector<Vertex> order;  // vertices by decreasing weight, ties by label
};

/// Euclidean projection onto the simplex: x_i = max(v_i - tau, 0), sum x = 1.
WeightVector project_to_simplex(std::span<const double> v);

struct AscentResult {
  std::vector<double> x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Projected gradient ascent from `start`. A nonempty `allowed` mask (one
/// entry per vertex) pins the other coordinates at zero. Steps double after
/// an improvement and halve otherwise; the run stops once the projected
/// gradient step ||P(x + g) - x||_inf drops to tol_grad.
AscentResult ascend(const Hypergraph& h, const Coefficients& alpha, std::span<const double> start,
                    const SolverConfig& cfg, std::span<const char> allowed = {});

/// Best of: uniform weight on maximal complete subgraphs, uniform weight on
/// each prefix [k], the grid argmax when the grid is small, and `starts`
/// Dirichlet(1) random starts. Each run is polished and its support reduced
/// until every support pair lies in a common edge. Among values within
/// tol_value of the best, the smallest support wins, then the
/// lexicographically smallest support.
OptimizationResult maximize(const Hypergraph& h, const Coefficients& alpha, const SolverConfig& cfg = {});

/// C(D+n-1, n-1) as a double, to test feasibility before enumerating.
double grid_size(int n, int resolution);

struct GridResult {
  double value = 0;
  WeightVector x{std::vector<double>{1.0}};
  std::uint64_t points = 0;
  double polished_value = 0;  // one ascent run from the grid argmax
  WeightVector polished_x{std::vector<double>{1.0}};
};

inline constexpr double kMaxGridPoints = 1e7;

/// Exhausts {k/D : sum k = D}. Throws InputError beyond kMaxGridPoints points.
GridResult grid_oracle(const Hypergraph& h, const Coefficients& alpha, int resolution,
                       const SolverConfig& polish = {});

/// Spread of the gradient over the support plus the largest excess of an
/// off-support gradient entry over the support maximum. Zero exactly at
/// first-order critical points.
double kkt_residual(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x,
                    double support_epsilon = 1e-10);

/// True iff every pair of support vertices lies in a common edge.
bool support_pair_cover(const Hypergraph& h, std::span<const Vertex> support);
bool support_pair_cover(const Hypergraph& h, const OptimizationResult& result);

}  // namespace lagrangian
