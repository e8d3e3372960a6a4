#include "lagrangian/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "lagrangian/cliques.hpp"
#include "lagrangian/error.hpp"

namespace lagrangian {

namespace {

// Entries this small after a run are suspected to belong at zero.
constexpr double kRepolishThreshold = 1e-6;
// The grid argmax joins the start set when the grid is at most this big.
constexpr double kGridStartLimit = 2e5;
constexpr double kMaxStep = 1e8;
constexpr int kReductionRounds = 8;

// Projection onto the face spanned by the allowed coordinates.
std::vector<double> project_masked(std::span<const double> v, std::span<const char> allowed) {
  std::vector<double> u;
  u.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (allowed.empty() || allowed[i]) u.push_back(v[i]);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0, tau = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[k] - candidate > 0) tau = candidate;
  }
  std::vector<double> x(v.size(), 0.0);
  double sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!allowed.empty() && !allowed[i]) continue;
    x[i] = std::max(v[i] - tau, 0.0);
    sum += x[i];
  }
  for (auto& xi : x) xi /= sum;
  return x;
}

double stationarity(std::span<const double> x, std::span<const double> g, std::span<const char> allowed) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + g[i];
  const auto p = project_masked(y, allowed);
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(p[i] - x[i]));
  return worst;
}

std::vector<Vertex> support_of(std::span<const double> x, double eps) {
  std::vector<Vertex> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > eps) s.push_back(static_cast<Vertex>(i + 1));
  return s;
}

// Zeroes entries at or below eps and rescales the rest to sum 1.
std::vector<double> truncate(std::span<const double> x, double eps) {
  std::vector<double> y(x.begin(), x.end());
  double sum = 0;
  for (auto& v : y) {
    if (v <= eps) v = 0;
    sum += v;
  }
  if (sum <= 0) return std::vector<double>(x.begin(), x.end());
  for (auto& v : y) v /= sum;
  return y;
}

std::vector<char> mask_of(std::span<const double> x, double eps) {
  std::vector<char> m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) m[i] = x[i] > eps;
  return m;
}

bool pair_covered(const Hypergraph& h, Vertex i, Vertex j) {
  for (const auto& [r, edges] : h.levels()) {
    if (r < 2) continue;
    for (const auto& e : edges)
      if (std::binary_search(e.begin(), e.end(), i) && std::binary_search(e.begin(), e.end(), j)) return true;
  }
  return false;
}

struct Candidate {
  AscentResult run;
  SolveMethod method;
  std::vector<Vertex> support;
};

// Polish, truncate, and merge uncovered support pairs. L is affine along
// e_i - e_j when no edge holds both i and j, so moving all of the pair's
// weight onto the larger gradient entry never lowers the value.
AscentResult finish(const Hypergraph& h, const Coefficients& alpha, AscentResult run, const SolverConfig& cfg) {
  const double eps = cfg.support_epsilon;
  auto small = [&](const std::vector<double>& x) {
    return std::any_of(x.begin(), x.end(), [&](double v) { return v > eps && v < kRepolishThreshold; });
  };
  auto absorb = [&](AscentResult next) {
    next.iterations += run.iterations;
    run = std::move(next);
  };

  if (small(run.x)) {
    const auto trimmed = truncate(run.x, kRepolishThreshold);
    auto again = ascend(h, alpha, trimmed, cfg, mask_of(trimmed, 0.0));
    if (again.value >= run.value - 1e-10) absorb(std::move(again));
  }

  for (int round = 0; round < kReductionRounds; ++round) {
    while (true) {
      run.x = truncate(run.x, eps);
      const auto support = support_of(run.x, eps);
      Vertex keep = 0, drop = 0;
      for (std::size_t a = 0; a < support.size() && !keep; ++a)
        for (std::size_t b = a + 1; b < support.size() && !keep; ++b)
          if (!pair_covered(h, support[a], support[b])) {
            keep = support[a];
            drop = support[b];
          }
      if (!keep) break;
      const auto g = gradient(h, alpha, run.x);
      if (g[drop - 1] > g[keep - 1]) std::swap(keep, drop);
      run.x[keep - 1] += run.x[drop - 1];
      run.x[drop - 1] = 0;
      absorb(ascend(h, alpha, run.x, cfg, mask_of(run.x, 0.0)));
    }
    // A critical point of the reduced face need not be critical for the full problem.
    auto full = ascend(h, alpha, run.x, cfg);
    if (full.iterations == 0) break;
    const bool same_support = support_of(truncate(full.x, eps), eps) == support_of(run.x, eps);
    absorb(std::move(full));
    if (same_support) break;
  }
  run.x = truncate(run.x, eps);
  run.value = eval_L(h, alpha, run.x);
  return run;
}

std::vector<double> grid_argmax(const Hypergraph& h, const Coefficients& alpha, int resolution, double& best,
                                std::uint64_t& points) {
  const int n = h.order();
  std::vector<int> k(n, 0);
  std::vector<double> x(n), best_x;
  best = -std::numeric_limits<double>::infinity();
  points = 0;
  // Compositions of D into n parts in lexicographic order, first part largest first.
  k[0] = resolution;
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = static_cast<double>(k[i]) / resolution;
    const double v = eval_L(h, alpha, x);
    ++points;
    if (v > best) {
      best = v;
      best_x = x;
    }
    // Next composition: move one unit from the last nonzero part before the tail.
    int i = n - 2;
    while (i >= 0 && k[i] == 0) --i;
    if (i < 0) break;
    --k[i];
    const int tail = k[n - 1];
    k[n - 1] = 0;
    k[i + 1] = tail + 1;
  }
  return best_x;
}

}  // namespace

void SolverConfig::validate() const {
  if (starts < 1) throw InputError("starts must be positive");
  if (max_iters < 1) throw InputError("max_iters must be positive");
  if (!(initial_step > 0)) throw InputError("initial step must be positive");
  if (!(tol_grad > 0) || !(tol_value > 0)) throw InputError("tolerances must be positive");
  if (!(support_epsilon > 0)) throw InputError("support epsilon must be positive");
  if (grid_resolution < 1) throw InputError("grid resolution must be positive");
}

SolverConfig solver_config_from_json(const nlohmann::json& j, SolverConfig cfg) {
  if (!j.is_object()) throw InputError("solver config must be a JSON object");
  try {
    if (j.contains("starts")) cfg.starts = j["starts"].get<int>();
    if (j.contains("max_iters")) cfg.max_iters = j["max_iters"].get<int>();
    if (j.contains("initial_step")) cfg.initial_step = j["initial_step"].get<double>();
    if (j.contains("tol_grad")) cfg.tol_grad = j["tol_grad"].get<double>();
    if (j.contains("tol_value")) cfg.tol_value = j["tol_value"].get<double>();
    if (j.contains("support_epsilon")) cfg.support_epsilon = j["support_epsilon"].get<double>();
    if (j.contains("grid_resolution")) cfg.grid_resolution = j["grid_resolution"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad solver config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::multistart: return "multistart";
    case SolveMethod::grid: return "grid";
    case SolveMethod::warmstart: return "warmstart";
    case SolveMethod::combined: return "combined";
  }
  return "unknown";
}

WeightVector project_to_simplex(std::span<const double> v) {
  if (v.empty()) throw InputError("cannot project an empty vector");
  return WeightVector(project_masked(v, {}));
}

AscentResult ascend(const Hypergraph& h, const Coefficients& alpha, std::span<const double> start,
                    const SolverConfig& cfg, std::span<const char> allowed) {
  AscentResult out;
  out.x = project_masked(start, allowed);
  out.value = eval_L(h, alpha, out.x);
  auto g = gradient(h, alpha, out.x);
  double stat = stationarity(out.x, g, allowed);
  double step = cfg.initial_step;
  const double noise = 8 * std::numeric_limits<double>::epsilon();

  std::vector<double> trial(out.x.size());
  while (stat > cfg.tol_grad && out.iterations < cfg.max_iters) {
    ++out.iterations;
    bool moved = false;
    for (; step > 1e-16; step /= 2) {
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = out.x[i] + step * g[i];
      auto z = project_masked(trial, allowed);
      const double fz = eval_L(h, alpha, z);
      if (fz < out.value - noise * std::max(1.0, std::abs(out.value))) continue;
      auto gz = gradient(h, alpha, z);
      const double sz = stationarity(z, gz, allowed);
      // Near the optimum the value stops resolving; accept a step that is at
      // least as good within rounding when it moves closer to critical.
      if (fz > out.value || sz < stat) {
        out.x = std::move(z);
        out.value = std::max(out.value, fz);
        g = std::move(gz);
        stat = sz;
        moved = true;
        break;
      }
    }
    if (!moved) {
      out.converged = stat <= std::sqrt(cfg.tol_grad);
      return out;
    }
    step = std::min(step * 2, kMaxStep);
  }
  out.value = eval_L(h, alpha, out.x);
  out.converged = stat <= cfg.tol_grad;
  return out;
}

OptimizationResult maximize(const Hypergraph& h, const Coefficients& alpha, const SolverConfig& cfg) {
  cfg.validate();
  alpha.require_covers(h);
  const int n = h.order();
  OptimizationResult result;

  if (h.empty()) {
    std::vector<double> e1(n, 0.0);
    e1[0] = 1.0;
    result.x = WeightVector(std::move(e1));
    result.support = {1};
    result.converged = true;
    result.method = SolveMethod::warmstart;
    result.order = vertex_range(n);
    return result;
  }

  std::vector<std::pair<std::vector<double>, SolveMethod>> starts;
  auto add_uniform = [&](std::span<const Vertex> set, SolveMethod m) {
    if (set.empty()) return;
    const auto w = WeightVector::uniform_on(n, set);
    starts.emplace_back(std::vector<double>(w.values().begin(), w.values().end()), m);
  };

  const EdgeTypeSet types(h.edge_types());
  for (const auto& set : maximal_complete_subgraphs(h, types)) add_uniform(set, SolveMethod::warmstart);
  for (int r : types) add_uniform(max_complete_subgraph(h, EdgeTypeSet{r}).vertices, SolveMethod::warmstart);
  add_uniform(max_complete_subgraph(h, types).vertices, SolveMethod::warmstart);
  for (int k = 1; k <= n; ++k) add_uniform(vertex_range(k), SolveMethod::warmstart);

  if (grid_size(n, cfg.grid_resolution) <= kGridStartLimit) {
    double best = 0;
    std::uint64_t points = 0;
    starts.emplace_back(grid_argmax(h, alpha, cfg.grid_resolution, best, points), SolveMethod::grid);
  }

  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.starts; ++s) starts.emplace_back(rng.dirichlet(n), SolveMethod::multistart);

  std::vector<Candidate> candidates;
  candidates.reserve(starts.size());
  for (const auto& [x0, method] : starts) {
    auto run = finish(h, alpha, ascend(h, alpha, x0, cfg), cfg);
    auto support = support_of(run.x, cfg.support_epsilon);
    candidates.push_back({std::move(run), method, std::move(support)});
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) best = std::max(best, c.run.value);
  const Candidate* chosen = nullptr;
  for (const auto& c : candidates) {
    if (c.run.value < best - cfg.tol_value) continue;
    if (!chosen || c.support.size() < chosen->support.size() ||
        (c.support.size() == chosen->support.size() && c.support < chosen->support))
      chosen = &c;
  }

  result.x = WeightVector(chosen->run.x);
  result.value = eval_L(h, alpha, result.x);
  result.support = chosen->support;
  result.kkt_residual = kkt_residual(h, alpha, result.x, cfg.support_epsilon);
  result.method = chosen->method;
  result.iterations = chosen->run.iterations;
  result.converged = chosen->run.converged;
  result.order = vertex_range(n);
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](Vertex a, Vertex b) { return result.x[a - 1] > result.x[b - 1]; });
  return result;
}

double grid_size(int n, int resolution) {
  // C(D + n - 1, n - 1) in floating point; exact enough for a size check.
  double c = 1;
  for (int i = 1; i < n; ++i) c = c * (resolution + i) / i;
  return c;
}

GridResult grid_oracle(const Hypergraph& h, const Coefficients& alpha, int resolution, const SolverConfig& polish) {
  if (resolution < 1) throw InputError("grid resolution must be positive");
  alpha.require_covers(h);
  const double size = grid_size(h.order(), resolution);
  if (size > kMaxGridPoints)
    throw InputError("grid of " + std::to_string(static_cast<long long>(size)) + " points exceeds the limit of " +
                     std::to_string(static_cast<long long>(kMaxGridPoints)));
  GridResult out;
  auto x = grid_argmax(h, alpha, resolution, out.value, out.points);
  out.x = WeightVector(x);
  auto polished = ascend(h, alpha, x, polish);
  if (polished.value >= out.value) {
    out.polished_value = polished.value;
    out.polished_x = WeightVector(std::move(polished.x));
  } else {
    out.polished_value = out.value;
    out.polished_x = out.x;
  }
  return out;
}

double kkt_residual(const Hypergraph& h, const Coefficients& alpha, std::span<const double> x,
                    double support_epsilon) {
  const auto g = gradient(h, alpha, x);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, off = -lo;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > support_epsilon) {
      lo = std::min(lo, g[i]);
      hi = std::max(hi, g[i]);
    } else {
      off = std::max(off, g[i]);
    }
  }
  if (hi < lo) return 0;  // no support at all
  return (hi - lo) + std::max(0.0, off - hi);
}

bool support_pair_cover(const Hypergraph& h, std::span<const Vertex> support) {
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      Vertex i = std::min(support[a], support[b]), j = std::max(support[a], support[b]);
      if (!pair_covered(h, i, j)) return false;
    }
  return true;
}

bool support_pair_cover(const Hypergraph& h, const OptimizationResult& result) {
  return support_pair_cover(h, result.support);
}

}  // namespace lagrangian
