#include "lagrangian/cliques.hpp"

#include <algorithm>

namespace lagrangian {

namespace {

// Enumerating maximal sets walks every complete set; dense inputs are cut off here.
constexpr std::size_t kNodeBudget = std::size_t{1} << 18;

class CompleteSetSearch {
 public:
  CompleteSetSearch(const Hypergraph& h, const EdgeTypeSet& types) : h_(h), types_(types), n_(h.order()) {
    if (types_.contains(2)) {
      adjacent_.assign((n_ + 1) * (n_ + 1), 0);
      for (const auto& e : h_.edges(2)) {
        adjacent_[e[0] * (n_ + 1) + e[1]] = 1;
        adjacent_[e[1] * (n_ + 1) + e[0]] = 1;
      }
    }
  }

  // Vertices v with {v} complete, in label order.
  std::vector<Vertex> seeds() const {
    std::vector<Vertex> out;
    std::vector<Vertex> empty;
    for (Vertex v = 1; v <= n_; ++v)
      if (can_extend(empty, v)) out.push_back(v);
    return out;
  }

  // Assuming `set` (sorted) is complete, is set + {v} complete?
  bool can_extend(const std::vector<Vertex>& set, Vertex v) const {
    if (!adjacent_.empty()) {
      for (Vertex u : set)
        if (!adjacent_[u * (n_ + 1) + v]) return false;
    }
    const int size = static_cast<int>(set.size());
    for (int r : types_) {
      if (r > size + 1) break;
      if (r == 2 && !adjacent_.empty()) continue;
      bool ok = true;
      Edge probe;
      for_each_subset(set, r - 1, [&](std::span<const Vertex> a) {
        if (!ok) return;
        probe.assign(a.begin(), a.end());
        probe.insert(std::upper_bound(probe.begin(), probe.end(), v), v);
        if (!h_.contains(probe)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  std::vector<Vertex> extend_candidates(const std::vector<Vertex>& set, std::span<const Vertex> pool) const {
    std::vector<Vertex> out;
    for (Vertex w : pool)
      if (can_extend(set, w)) out.push_back(w);
    return out;
  }

  bool is_maximal(const std::vector<Vertex>& set) const {
    for (Vertex w = 1; w <= n_; ++w) {
      if (std::binary_search(set.begin(), set.end(), w)) continue;
      if (can_extend(set, w)) return false;
    }
    return true;
  }

 private:
  const Hypergraph& h_;
  const EdgeTypeSet& types_;
  int n_;
  std::vector<char> adjacent_;
};

struct MaxSearch {
  const CompleteSetSearch& search;
  std::vector<Vertex> best;
  int best_order = -1;
  bool unique = true;
  int stop_at = -1;  // early exit once a set of this order is found

  bool done() const { return stop_at >= 0 && best_order >= stop_at; }

  void run(std::vector<Vertex>& set, const std::vector<Vertex>& candidates) {
    const int size = static_cast<int>(set.size());
    if (size > best_order) {
      best = set;
      best_order = size;
      unique = true;
    } else if (size == best_order) {
      unique = false;
    }
    for (std::size_t idx = 0; idx < candidates.size() && !done(); ++idx) {
      const int reachable = size + static_cast<int>(candidates.size() - idx);
      if (reachable < best_order || (reachable == best_order && !unique)) break;
      set.push_back(candidates[idx]);
      const auto rest = std::span<const Vertex>(candidates).subspan(idx + 1);
      run(set, search.extend_candidates(set, rest));
      set.pop_back();
    }
  }
};

}  // namespace

CliqueResult max_complete_subgraph(const Hypergraph& h, const EdgeTypeSet& types) {
  CompleteSetSearch search(h, types);
  MaxSearch max{search, {}, -1, true, -1};
  std::vector<Vertex> set;
  max.run(set, search.seeds());
  return {max.best, max.best_order, max.unique};
}

bool contains_complete(const Hypergraph& h, int t, const EdgeTypeSet& types) {
  if (t <= 0) return true;
  if (t > h.order()) return false;
  CompleteSetSearch search(h, types);
  MaxSearch max{search, {}, -1, true, t};
  std::vector<Vertex> set;
  max.run(set, search.seeds());
  return max.best_order >= t;
}

std::vector<std::vector<Vertex>> maximal_complete_subgraphs(const Hypergraph& h, const EdgeTypeSet& types,
                                                            std::size_t limit) {
  CompleteSetSearch search(h, types);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> set;
  std::size_t nodes = 0;
  auto visit = [&](auto&& self, const std::vector<Vertex>& candidates) -> void {
    ++nodes;
    if (!set.empty() && search.is_maximal(set)) out.push_back(set);
    for (std::size_t idx = 0; idx < candidates.size() && out.size() < limit && nodes < kNodeBudget; ++idx) {
      set.push_back(candidates[idx]);
      const auto rest = std::span<const Vertex>(candidates).subspan(idx + 1);
      self(self, search.extend_candidates(set, rest));
      set.pop_back();
    }
  };
  visit(visit, search.seeds());
  return out;
}

}  // namespace lagrangian
