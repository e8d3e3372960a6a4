#include "lagrangian/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "lagrangian/error.hpp"

namespace lagrangian {

std::string format_edge(std::span<const Vertex> edge) {
  std::string out = "{";
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edge[i]);
  }
  return out + "}";
}

EdgeTypeSet::EdgeTypeSet(std::initializer_list<int> types) : EdgeTypeSet(std::vector<int>(types)) {}

EdgeTypeSet::EdgeTypeSet(std::vector<int> types) : types_(std::move(types)) {
  if (types_.empty()) throw InputError("edge-type set must be nonempty");
  std::sort(types_.begin(), types_.end());
  types_.erase(std::unique(types_.begin(), types_.end()), types_.end());
  if (types_.front() < 1) throw InputError("edge types must be positive");
}

EdgeTypeSet EdgeTypeSet::parse(std::string_view text) {
  std::vector<int> types;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      types.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("malformed edge-type list '" + std::string(text) + "'");
    }
  }
  return EdgeTypeSet(std::move(types));
}

bool EdgeTypeSet::contains(int r) const { return std::binary_search(types_.begin(), types_.end(), r); }

std::string EdgeTypeSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(types_[i]);
  }
  return out + "}";
}

Hypergraph validate(int n, std::vector<Edge> raw_edges) {
  if (n < 1) throw InputError("vertex count must be positive, got " + std::to_string(n));
  std::map<int, std::vector<Edge>> levels;
  for (auto& e : raw_edges) {
    if (e.empty()) throw InputError("empty edge");
    std::sort(e.begin(), e.end());
    for (Vertex v : e) {
      if (v < 1 || v > n)
        throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw InputError("repeated vertex in edge " + format_edge(e));
    const int r = static_cast<int>(e.size());
    levels[r].push_back(std::move(e));
  }
  for (auto& [r, edges] : levels) {
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw InputError("duplicate edge " + format_edge(*dup));
  }
  return Hypergraph(n, std::move(levels));
}

std::vector<int> Hypergraph::edge_types() const {
  std::vector<int> types;
  for (const auto& [r, edges] : levels_) types.push_back(r);
  return types;
}

std::span<const Edge> Hypergraph::edges(int r) const {
  auto it = levels_.find(r);
  if (it == levels_.end()) return {};
  return it->second;
}

std::size_t Hypergraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& [r, edges] : levels_) total += edges.size();
  return total;
}

bool Hypergraph::contains(std::span<const Vertex> edge) const {
  const auto level = edges(static_cast<int>(edge.size()));
  return std::binary_search(level.begin(), level.end(), edge,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                            });
}

std::vector<Edge> Hypergraph::all_edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (const auto& [r, edges] : levels_) out.insert(out.end(), edges.begin(), edges.end());
  return out;
}

void check_limits(const Hypergraph& h, const Limits& limits) {
  if (h.order() > limits.max_vertices)
    throw InputError("vertex count " + std::to_string(h.order()) + " exceeds limit " +
                     std::to_string(limits.max_vertices));
  const auto types = h.edge_types();
  if (!types.empty() && types.back() > limits.max_edge_size)
    throw InputError("edge cardinality " + std::to_string(types.back()) + " exceeds limit " +
                     std::to_string(limits.max_edge_size));
}

std::vector<Vertex> vertex_range(int n) {
  std::vector<Vertex> vs(std::max(n, 0));
  for (int i = 0; i < n; ++i) vs[i] = i + 1;
  return vs;
}

Hypergraph complete(int n, const EdgeTypeSet& types) {
  if (types.max() > n)
    throw InputError("edge type " + std::to_string(types.max()) + " exceeds vertex count " +
                     std::to_string(n));
  const auto vs = vertex_range(n);
  std::vector<Edge> edges;
  for (int r : types) {
    for_each_subset(vs, r, [&](std::span<const Vertex> s) { edges.emplace_back(s.begin(), s.end()); });
  }
  return validate(n, std::move(edges));
}

Hypergraph level(const Hypergraph& h, int r) {
  const auto edges = h.edges(r);
  return validate(h.order(), std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<Vertex> vertex_support(const Hypergraph& h, int r) {
  std::vector<char> seen(h.order() + 1, 0);
  for (const auto& e : h.edges(r))
    for (Vertex v : e) seen[v] = 1;
  std::vector<Vertex> support;
  for (Vertex v = 1; v <= h.order(); ++v)
    if (seen[v]) support.push_back(v);
  return support;
}

bool is_complete_on(const Hypergraph& h, std::span<const Vertex> subset, const EdgeTypeSet& types) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  const int size = static_cast<int>(s.size());
  for (int r : types) {
    if (r > size) break;
    if (binomial(size, r) > h.edge_count(r)) return false;
    bool ok = true;
    for_each_subset(s, r, [&](std::span<const Vertex> e) {
      if (ok && !h.contains(e)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label) {
  const int n = h.order();
  if (static_cast<int>(new_label.size()) != n) throw InputError("relabeling must cover every vertex");
  std::vector<Vertex> check(new_label.begin(), new_label.end());
  std::sort(check.begin(), check.end());
  if (check != vertex_range(n)) throw InputError("relabeling is not a permutation of 1..n");
  std::vector<Edge> edges;
  for (auto e : h.all_edges()) {
    for (auto& v : e) v = new_label[v - 1];
    edges.push_back(std::move(e));
  }
  return validate(n, std::move(edges));
}

Hypergraph with_edges(const Hypergraph& h, std::vector<Edge> extra) {
  auto edges = h.all_edges();
  for (auto& e : extra) {
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return validate(h.order(), std::move(edges));
}

Hypergraph with_singletons(const Hypergraph& h) {
  std::vector<Edge> singles;
  for (Vertex v = 1; v <= h.order(); ++v) singles.push_back({v});
  return with_edges(h, std::move(singles));
}

Hypergraph without_vertices(const Hypergraph& h, std::span<const Vertex> removed) {
  std::vector<char> gone(h.order() + 1, 0);
  for (Vertex v : removed) {
    if (v >= 1 && v <= h.order()) gone[v] = 1;
  }
  std::vector<Edge> kept;
  for (const auto& e : h.all_edges()) {
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return gone[v]; })) kept.push_back(e);
  }
  return validate(h.order(), std::move(kept));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace lagrangian
