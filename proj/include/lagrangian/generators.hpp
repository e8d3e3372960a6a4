#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lagrangian/hypergraph.hpp"

namespace lagrangian {

/// t6a: K_t on [t] plus r-edges over [n] containing all of [t]^(r).
/// t7a: K_t plus m - C(t,2) edges from vertex t+1 into [t] (at most t-2).
/// ptz: [t]^(r) plus m - C(t,r) r-sets through vertex t+1, on t+1 vertices.
/// tpzz-free: m random 3-edges with no complete 3-graph of order t.
/// random-lc: a random graph pushed to its left-compressed fixpoint.
enum class Family { t6a, t7a, ptz, tpzz_free, random_lc };

std::string to_string(Family f);
Family parse_family(std::string_view name);

struct GeneratorParams {
  int t = 4;
  int r = 3;
  std::optional<int> n;   // family default when unset
  std::optional<long long> m;
  bool complete_r_level = false;  // t6a: all r-subsets of [n] instead of random ones
  double density = 0.5;           // random-lc, and the random r-level of t6a
  std::optional<EdgeTypeSet> types;  // random-lc; defaults to {2,r}
  bool singletons = false;        // add {v} for every vertex
  bool pairs = false;             // ptz: add K_t^(2) on [t]
};

/// Keys as in the struct, plus "r_level": "random" | "complete".
GeneratorParams generator_params_from_json(const nlohmann::json& j);

inline constexpr int kMaxGeneratorRetries = 1000;

/// Seed-deterministic planted instance. Random parts are resampled until the
/// family's target hypotheses hold; throws InfeasibleWindow when the
/// parameters fall outside the family's window or no sample qualifies.
Hypergraph gen_planted(Family family, const GeneratorParams& params, std::uint64_t seed);

/// Includes each r-subset of [n], r in T, independently with probability
/// density[r] (default `fallback`), in lexicographic order per level.
Hypergraph gen_random(int n, const EdgeTypeSet& types, const std::map<int, double>& density, std::uint64_t seed,
                      double fallback = 0.5);

}  // namespace lagrangian
