#include "lagrangian/compression.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lagrangian/error.hpp"

namespace lagrangian {

namespace {

void require_pair(Vertex i, Vertex j) {
  if (i >= j)
    throw InputError("compression needs i < j, got i=" + std::to_string(i) + ", j=" + std::to_string(j));
}

}  // namespace

Edge compress_edge(std::span<const Vertex> edge, Vertex i, Vertex j) {
  require_pair(i, j);
  Edge e(edge.begin(), edge.end());
  const bool has_i = std::binary_search(e.begin(), e.end(), i);
  const auto pos_j = std::lower_bound(e.begin(), e.end(), j);
  if (has_i || pos_j == e.end() || *pos_j != j) return e;
  *pos_j = i;
  std::sort(e.begin(), e.end());
  return e;
}

Hypergraph compress_hypergraph(const Hypergraph& h, Vertex i, Vertex j) {
  require_pair(i, j);
  if (i < 1 || j > h.order())
    throw InputError("compression pair (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 1.." + std::to_string(h.order()));
  std::vector<Edge> out;
  out.reserve(h.edge_count());
  for (const auto& [r, edges] : h.levels()) {
    for (const auto& e : edges) {
      auto image = compress_edge(e, i, j);
      if (image != e && !h.contains(image)) {
        out.push_back(std::move(image));
      } else {
        out.push_back(e);
      }
    }
  }
  return validate(h.order(), std::move(out));
}

bool is_left_compressed(const Hypergraph& h) {
  for (const auto& [r, edges] : h.levels()) {
    for (const auto& e : edges) {
      for (Vertex j : e) {
        for (Vertex i = 1; i < j; ++i) {
          if (std::binary_search(e.begin(), e.end(), i)) continue;
          if (!h.contains(compress_edge(e, i, j))) return false;
        }
      }
    }
  }
  return true;
}

std::uint64_t compression_potential(const Hypergraph& h) {
  std::uint64_t phi = 0;
  for (const auto& [r, edges] : h.levels())
    for (const auto& e : edges)
      for (Vertex v : e) phi += static_cast<std::uint64_t>(v);
  return phi;
}

FixpointResult left_compress(const Hypergraph& h) {
  FixpointResult result{h, 0};
  const std::uint64_t bound = compression_potential(h);
  const int n = h.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex i = 1; i < n && !changed; ++i) {
      for (Vertex j = i + 1; j <= n && !changed; ++j) {
        auto next = compress_hypergraph(result.graph, i, j);
        if (next != result.graph) {
          result.graph = std::move(next);
          ++result.steps;
          changed = true;
        }
      }
    }
    if (static_cast<std::uint64_t>(result.steps) > bound)
      throw std::logic_error("left compression exceeded its potential bound");
  }
  return result;
}

}  // namespace lagrangian
