#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lagrangian/hypergraph.hpp"
#include "lagrangian/objective.hpp"
#include "lagrangian/optimizer.hpp"
#include "lagrangian/rational.hpp"

namespace lagrangian {

enum class TheoremId {
  MS_T1,
  NONUNIF_T3,
  ONE_R_T4,
  ONE_TWO_THREE_T5,
  TWO_R_T6a,
  ONE_TWO_R_T6b,
  TWO_R_EDGES_T7a,
  ONE_TWO_R_EDGES_T7b,
  COR1a,
  COR1b,
  COR2a,
  COR2b,
  GENERAL_T9a,
  GENERAL_T9b,
  MIXED_T10a,
  MIXED_T10b,
  MIXED_T10c,
  PZ,
  TPZZ,
  PTZ,
};

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(std::string_view name);
const std::vector<TheoremId>& all_theorems();

/// Parameters shared by the registry. Unset fields are filled from the
/// instance by verify(): t from the relevant clique order, r from the largest
/// edge type, types from T(H). Coefficients missing from `alpha` default to 1.
struct TheoremParams {
  std::optional<int> t;
  std::optional<int> r;
  std::map<int, Rational> alpha;
  std::optional<EdgeTypeSet> types;
  double strictness_margin = 1e-4;

  Rational coefficient(int r) const;
};

/// `{"t": 4, "r": 3, "alpha": {"3": 1}, "types": [2,3], "strictness_margin": 1e-4}`.
TheoremParams theorem_params_from_json(const nlohmann::json& j);

/// The theorem's extremal value, exactly. Throws InputError when a needed
/// parameter is missing or out of the formula's range.
Rational closed_form_exact(TheoremId id, const TheoremParams& params);
double closed_form(TheoremId id, const TheoremParams& params);

/// lambda'(K_t^T) = sum_{s in T} s! C(t,s) / t^s.
Rational lambda_prime_of_complete(int t, const EdgeTypeSet& types);

/// lambda'(K_t^T) for the graph families closing the lambda' results:
/// {2,r} for COR1a and MIXED_T10a, {1,2,r} for COR1b, {1,3} for MIXED_T10b.
Rational lambda_prime_closed(TheoremId id, int t, int r);

struct Condition {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct HypothesisReport {
  bool ok = false;
  std::vector<Condition> conditions;
  std::vector<std::string> notes;
  int t = 0;
  int r = 0;
  long long m = 0;                // edge count the theorem's window refers to
  std::vector<Vertex> clique;     // maximum complete subgraph of the relevant type set
  bool strict_branch = false;     // the conclusion is a strict inequality
};

/// Evaluates every hypothesis of `id` on H; failures are reported, not thrown.
HypothesisReport check_hypotheses(TheoremId id, const Hypergraph& h, const TheoremParams& params);

/// The objective the theorem speaks about, as coefficients for eval_L, and
/// the factor that turns L into the stated quantity (r0! for lambda').
struct TheoremObjective {
  ExactCoefficients alpha;
  Rational scale;
  bool lambda_prime = false;
};

TheoremObjective theorem_objective(TheoremId id, const Hypergraph& h, const TheoremParams& params);

struct TheoremVerdict {
  TheoremId id = TheoremId::MS_T1;
  HypothesisReport hypotheses;
  double closed_form = 0;
  std::string closed_form_exact;
  double numerical = 0;
  double uniform_on_clique = 0;
  std::string uniform_on_clique_exact;
  bool uniform_matches_exactly = false;
  double kkt_residual = 0;
  bool converged = false;
  std::vector<double> x;
  double tolerance = 0;
  double margin = 0;        // strict branch only
  double observed_gap = 0;  // closed_form - numerical
  double bridge_gap = 0;    // |r0! L - lambda'| at the solution, lambda' results only
  bool pass = false;
};

TheoremVerdict verify(TheoremId id, const Hypergraph& h, const TheoremParams& params, const SolverConfig& cfg = {},
                      double tol = 1e-6);

nlohmann::json to_json(const TheoremVerdict& v);

}  // namespace lagrangian
