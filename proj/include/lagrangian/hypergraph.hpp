#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lagrangian {

// Vertices are labeled 1..n everywhere, including the API.
using Vertex = int;

// A strictly increasing sequence of vertices.
using Edge = std::vector<Vertex>;

std::string format_edge(std::span<const Vertex> edge);

/// Sorted set of distinct positive edge cardinalities, e.g. {1,2,3}.
class EdgeTypeSet {
 public:
  EdgeTypeSet(std::initializer_list<int> types);
  explicit EdgeTypeSet(std::vector<int> types);

  /// Parses "2,3" or "1, 2, 4".
  static EdgeTypeSet parse(std::string_view text);

  bool contains(int r) const;
  int min() const { return types_.front(); }
  int max() const { return types_.back(); }
  std::size_t size() const { return types_.size(); }
  auto begin() const { return types_.begin(); }
  auto end() const { return types_.end(); }
  const std::vector<int>& values() const { return types_; }
  std::string str() const;

  friend bool operator==(const EdgeTypeSet&, const EdgeTypeSet&) = default;

 private:
  std::vector<int> types_;
};

class Hypergraph;

/// Canonicalizes raw edges into a Hypergraph. Throws InputError on an empty
/// edge, a repeated vertex inside an edge, a vertex outside 1..n, or two raw
/// edges that coincide after sorting.
Hypergraph validate(int n, std::vector<Edge> raw_edges);

/// Immutable non-uniform hypergraph on vertices 1..n with edges grouped by
/// cardinality. Each level is kept sorted so membership is a binary search.
class Hypergraph {
 public:
  int order() const noexcept { return n_; }

  /// T(H): cardinalities with at least one edge, ascending.
  std::vector<int> edge_types() const;

  /// Edges of cardinality r in lexicographic order (empty if none).
  std::span<const Edge> edges(int r) const;

  std::size_t edge_count() const noexcept;
  std::size_t edge_count(int r) const { return edges(r).size(); }
  bool empty() const noexcept { return levels_.empty(); }

  /// `edge` must be sorted.
  bool contains(std::span<const Vertex> edge) const;

  /// All edges ordered by cardinality, then lexicographically.
  std::vector<Edge> all_edges() const;

  const std::map<int, std::vector<Edge>>& levels() const noexcept { return levels_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend Hypergraph validate(int n, std::vector<Edge> raw_edges);
  Hypergraph(int n, std::map<int, std::vector<Edge>> levels) : n_(n), levels_(std::move(levels)) {}

  int n_ = 0;
  std::map<int, std::vector<Edge>> levels_;  // nonempty levels only
};

/// Desk-scale bounds applied when reading user input.
struct Limits {
  int max_vertices = 24;
  int max_edge_size = 6;
};

/// Throws InputError when `h` exceeds `limits`.
void check_limits(const Hypergraph& h, const Limits& limits);

/// K^T_n: every r-subset of [n] for each r in T.
Hypergraph complete(int n, const EdgeTypeSet& types);

/// H^r on the same vertex count; empty when H has no r-edges.
Hypergraph level(const Hypergraph& h, int r);

/// Vertices covered by the r-edges of H, ascending.
std::vector<Vertex> vertex_support(const Hypergraph& h, int r);

/// True iff every r-subset of S is an edge, for every r in T with r <= |S|.
bool is_complete_on(const Hypergraph& h, std::span<const Vertex> subset, const EdgeTypeSet& types);

/// Renames vertex v to new_label[v - 1]; `new_label` must be a permutation of 1..n.
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label);

/// Union of H with `extra`; edges already present are ignored.
Hypergraph with_edges(const Hypergraph& h, std::vector<Edge> extra);

/// Adds the singleton edge {v} for every vertex.
Hypergraph with_singletons(const Hypergraph& h);

/// Deletes every edge incident to a vertex in `removed`; the vertex count is kept.
Hypergraph without_vertices(const Hypergraph& h, std::span<const Vertex> removed);

std::uint64_t binomial(int n, int k);

/// Calls f(subset) for every k-subset of `pool`, in lexicographic order of
/// positions. `subset` is a reused buffer.
template <class F>
void for_each_subset(std::span<const Vertex> pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    f(std::span<const Vertex>(subset));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// The vertex list 1..n.
std::vector<Vertex> vertex_range(int n);

}  // namespace lagrangian
