#pragma once

#include <cstddef>
#include <vector>

#include "lagrangian/hypergraph.hpp"

namespace lagrangian {

struct CliqueResult {
  std::vector<Vertex> vertices;  // lexicographically smallest maximum set
  int order = 0;
  bool is_unique_max = true;     // false when another set of the same order exists
};

/// Exact maximum complete T-subgraph by branch and bound. Candidates are
/// grown in increasing label order; when 2 is in T the pair level prunes
/// first, and higher or lower levels are checked on each extension. When 1
/// is in T, vertices without a singleton edge never qualify.
CliqueResult max_complete_subgraph(const Hypergraph& h, const EdgeTypeSet& types);

/// True iff some t-subset is complete for T. t = 0 is vacuously true.
bool contains_complete(const Hypergraph& h, int t, const EdgeTypeSet& types);

/// Inclusion-maximal complete T-subgraphs in lexicographic order, at most
/// `limit` of them. The walk is also capped at 2^18 search nodes, so very
/// dense inputs may yield a partial list.
std::vector<std::vector<Vertex>> maximal_complete_subgraphs(const Hypergraph& h, const EdgeTypeSet& types,
                                                            std::size_t limit = 4096);

}  // namespace lagrangian
