#pragma once

// Brute-force reference implementations. They share no code paths with the
// library beyond the Hypergraph container itself.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "lagrangian/hypergraph.hpp"
#include "lagrangian/objective.hpp"
#include "lagrangian/random.hpp"
#include "lagrangian/rational.hpp"

namespace oracle {

using lagrangian::Edge;
using lagrangian::Hypergraph;
using lagrangian::Vertex;

inline std::set<Edge> edge_set(const Hypergraph& h) {
  auto all = h.all_edges();
  return {all.begin(), all.end()};
}

inline std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> s;
  for (int v = 0; v < 32; ++v)
    if (mask >> v & 1u) s.push_back(v + 1);
  return s;
}

// Every r-subset of s for r in types is an edge; checked via bitmasks.
inline bool complete_on(const std::set<Edge>& edges, std::uint32_t mask, const std::vector<int>& types) {
  for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
    const int size = std::popcount(sub);
    if (size > 0 && std::find(types.begin(), types.end(), size) != types.end() && !edges.count(members(sub)))
      return false;
    if (sub == 0) break;
  }
  return true;
}

struct CliqueAnswer {
  int order = 0;
  std::vector<Vertex> smallest;  // lexicographically smallest maximum set
  int count = 0;                 // number of maximum sets
};

inline CliqueAnswer max_clique(const Hypergraph& h, const std::vector<int>& types) {
  const auto edges = edge_set(h);
  CliqueAnswer best;
  for (std::uint32_t mask = 0; mask < (1u << h.order()); ++mask) {
    if (!complete_on(edges, mask, types)) continue;
    const int size = std::popcount(mask);
    const auto set = members(mask);
    if (size > best.order) {
      best = {size, set, 1};
    } else if (size == best.order) {
      ++best.count;
      if (set < best.smallest) best.smallest = set;
    }
  }
  return best;
}

inline std::vector<std::vector<Vertex>> maximal_cliques(const Hypergraph& h, const std::vector<int>& types) {
  const auto edges = edge_set(h);
  const std::uint32_t full = (1u << h.order()) - 1;
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!complete_on(edges, mask, types)) continue;
    bool maximal = true;
    for (int v = 0; v < h.order() && maximal; ++v)
      if (!(mask >> v & 1u) && complete_on(edges, mask | (1u << v), types)) maximal = false;
    if (maximal) out.push_back(members(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// L(H, x) by scanning every subset of [n] and asking the edge set.
inline double eval_by_subsets(const Hypergraph& h, const std::function<double(int)>& alpha, std::span<const double> x) {
  const auto edges = edge_set(h);
  double total = 0;
  for (std::uint32_t mask = 1; mask < (1u << h.order()); ++mask) {
    const auto s = members(mask);
    if (!edges.count(s)) continue;
    double p = alpha(static_cast<int>(s.size()));
    for (Vertex v : s) p *= x[v - 1];
    total += p;
  }
  return total;
}

// Central differences of f along each coordinate, unconstrained.
inline std::vector<double> finite_difference(const std::function<double(std::span<const double>)>& f,
                                             std::span<const double> x, double step = 1e-6) {
  std::vector<double> g(x.size()), y(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double keep = y[i];
    y[i] = keep + step;
    const double up = f(y);
    y[i] = keep - step;
    const double down = f(y);
    y[i] = keep;
    g[i] = (up - down) / (2 * step);
  }
  return g;
}

// Left-compressed straight from the definition: for every edge e and i<j
// with j in e and i not in e, the swapped set is an edge.
inline bool left_compressed(const Hypergraph& h) {
  const auto edges = edge_set(h);
  for (const auto& e : edges) {
    for (Vertex j : e) {
      for (Vertex i = 1; i < j; ++i) {
        if (std::binary_search(e.begin(), e.end(), i)) continue;
        Edge swapped = e;
        std::replace(swapped.begin(), swapped.end(), j, i);
        std::sort(swapped.begin(), swapped.end());
        if (!edges.count(swapped)) return false;
      }
    }
  }
  return true;
}

// sum_r alpha_r C(t,r)/t^r with exact arithmetic: L of K_t^T at the uniform point.
inline lagrangian::Rational complete_value(int t, const std::vector<int>& types,
                                           const std::function<lagrangian::Rational(int)>& alpha) {
  lagrangian::Rational total = 0;
  for (int r : types) {
    lagrangian::Rational term = alpha(r);
    // C(t,r)/t^r accumulated as a product of fractions.
    for (int i = 0; i < r; ++i) term *= lagrangian::Rational(t - i, (i + 1) * t);
    total += term;
  }
  return total;
}

// Random hypergraph with independent edges, for property tests.
inline Hypergraph random_graph(lagrangian::Rng& rng, int n, const std::vector<int>& types, double p) {
  std::vector<Edge> edges;
  const auto vs = lagrangian::vertex_range(n);
  for (int r : types)
    lagrangian::for_each_subset(vs, r, [&](std::span<const Vertex> s) {
      if (rng.uniform() < p) edges.emplace_back(s.begin(), s.end());
    });
  return lagrangian::validate(n, std::move(edges));
}

inline std::vector<double> random_point(lagrangian::Rng& rng, int n) { return rng.dirichlet(n); }

}  // namespace oracle
