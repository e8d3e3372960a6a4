#include "lagrangian/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lagrangian/cliques.hpp"
#include "lagrangian/error.hpp"

namespace lagrangian {

namespace {

struct Entry {
  TheoremId id;
  const char* name;
};

constexpr Entry kNames[] = {
    {TheoremId::MS_T1, "MS_T1"},
    {TheoremId::NONUNIF_T3, "NONUNIF_T3"},
    {TheoremId::ONE_R_T4, "ONE_R_T4"},
    {TheoremId::ONE_TWO_THREE_T5, "ONE_TWO_THREE_T5"},
    {TheoremId::TWO_R_T6a, "TWO_R_T6a"},
    {TheoremId::ONE_TWO_R_T6b, "ONE_TWO_R_T6b"},
    {TheoremId::TWO_R_EDGES_T7a, "TWO_R_EDGES_T7a"},
    {TheoremId::ONE_TWO_R_EDGES_T7b, "ONE_TWO_R_EDGES_T7b"},
    {TheoremId::COR1a, "COR1a"},
    {TheoremId::COR1b, "COR1b"},
    {TheoremId::COR2a, "COR2a"},
    {TheoremId::COR2b, "COR2b"},
    {TheoremId::GENERAL_T9a, "GENERAL_T9a"},
    {TheoremId::GENERAL_T9b, "GENERAL_T9b"},
    {TheoremId::MIXED_T10a, "MIXED_T10a"},
    {TheoremId::MIXED_T10b, "MIXED_T10b"},
    {TheoremId::MIXED_T10c, "MIXED_T10c"},
    {TheoremId::PZ, "PZ"},
    {TheoremId::TPZZ, "TPZZ"},
    {TheoremId::PTZ, "PTZ"},
};

using enum TheoremId;

bool is_lambda_prime(TheoremId id) {
  switch (id) {
    case NONUNIF_T3: case COR1a: case COR1b: case COR2a: case COR2b:
    case MIXED_T10a: case MIXED_T10b: case MIXED_T10c:
      return true;
    default:
      return false;
  }
}

bool needs_explicit_t(TheoremId id) { return id == TPZZ || id == MIXED_T10c; }

Rational frac(long long p, long long q) { return Rational(p, q); }

// prod_{i=1}^{r-1} (t - i)
Rational falling(int t, int r) {
  Rational p = 1;
  for (int i = 1; i < r; ++i) p *= t - i;
  return p;
}

Rational density(int t, int r) { return Rational(binomial_exact(t, r), Integer(boost::multiprecision::pow(Integer(t), r))); }

Rational r_term(int t, int r) { return falling(t, r) / (Rational(factorial(r)) * pow(Rational(t), r - 1)); }

int need_t(const TheoremParams& p) {
  if (!p.t) throw InputError("parameter t is required");
  if (*p.t < 1) throw InputError("t must be at least 1");
  return *p.t;
}

int need_r(const TheoremParams& p, int min_r) {
  if (!p.r) throw InputError("parameter r is required");
  if (*p.r < min_r) throw InputError("r must be at least " + std::to_string(min_r));
  return *p.r;
}

std::string str(const Rational& q) { return to_string(q); }
std::string str(long long v) { return std::to_string(v); }

// Edge types the theorem's hypergraph family may use.
EdgeTypeSet family_types(TheoremId id, const TheoremParams& p) {
  const int r = p.r.value_or(3);
  switch (id) {
    case MS_T1: return {2};
    case NONUNIF_T3: return {1, 2};
    case ONE_R_T4: return {1, r};
    case ONE_TWO_THREE_T5: return {1, 2, 3};
    case TWO_R_T6a: case TWO_R_EDGES_T7a: case COR1a: case COR2a: return {2, r};
    case ONE_TWO_R_T6b: case ONE_TWO_R_EDGES_T7b: case COR1b: case COR2b: return {1, 2, r};
    case GENERAL_T9a: case GENERAL_T9b:
      if (!p.types) throw InputError("edge-type set is required");
      return *p.types;
    case MIXED_T10a:
      return p.types && p.types->contains(1) ? EdgeTypeSet{1, 2, r} : EdgeTypeSet{2, r};
    case MIXED_T10b:
      return p.types && p.types->contains(2) ? EdgeTypeSet{1, 2, 3} : EdgeTypeSet{1, 3};
    case MIXED_T10c: return {1, 3};
    case PZ: case TPZZ: return {3};
    case PTZ: return {r};
  }
  throw InputError("unknown theorem");
}

int fixed_r(TheoremId id) {
  switch (id) {
    case ONE_TWO_THREE_T5: case MIXED_T10b: case MIXED_T10c: case PZ: case TPZZ: return 3;
    case MS_T1: case NONUNIF_T3: return 2;
    default: return 0;
  }
}

// Fills r, the type set and t from H wherever the caller left them open.
TheoremParams resolve(TheoremId id, const Hypergraph& h, const TheoremParams& params) {
  TheoremParams p = params;
  const auto present = h.edge_types();
  if (int r = fixed_r(id)) {
    p.r = r;
  } else if (id == GENERAL_T9a || id == GENERAL_T9b) {
    if (!p.types) {
      if (present.empty()) throw InputError("cannot infer the edge-type set of an empty hypergraph");
      p.types = EdgeTypeSet(present);
    }
    p.r = p.types->max();
  } else if (!p.r) {
    if (present.empty() || present.back() < 3) throw InputError("parameter r is required for this instance");
    p.r = present.back();
  }
  if (id == MIXED_T10a && !p.types) {
    p.types = std::find(present.begin(), present.end(), 1) != present.end() ? EdgeTypeSet{1, 2, *p.r}
                                                                            : EdgeTypeSet{2, *p.r};
  }
  if (id == MIXED_T10b && !p.types) {
    p.types = std::find(present.begin(), present.end(), 2) != present.end() ? EdgeTypeSet{1, 2, 3}
                                                                            : EdgeTypeSet{1, 3};
  }
  if (!p.t) {
    if (needs_explicit_t(id)) throw InputError(to_string(id) + " needs an explicit t");
    p.t = max_complete_subgraph(h, family_types(id, p)).order;
  }
  return p;
}

class Checker {
 public:
  explicit Checker(HypothesisReport& out) : out_(out) {}

  void add(std::string name, bool ok, std::string detail) {
    out_.conditions.push_back({std::move(name), ok, std::move(detail)});
  }

  void types_within(const Hypergraph& h, const EdgeTypeSet& allowed) {
    bool ok = true;
    std::string list = "{";
    for (int r : h.edge_types()) {
      ok = ok && allowed.contains(r);
      list += (list.size() > 1 ? "," : "") + std::to_string(r);
    }
    add("edge types", ok, "T(H)=" + list + "} within " + allowed.str());
  }

  void clique_order(const Hypergraph& h, const EdgeTypeSet& types, int t, const char* label) {
    const auto c = max_complete_subgraph(h, types);
    add(label, c.order == t, "maximum complete " + types.str() + "-subgraph has order " + str(c.order) +
                                 ", t=" + str(t));
  }

  void at_least(const char* name, const Rational& t, const Rational& bound) {
    add(name, t >= bound, "t=" + str(t) + " >= " + str(bound));
  }

  void window(const char* name, long long m, const Rational& lo, const Rational& hi) {
    add(name, lo <= m && Rational(m) <= hi, str(lo) + " <= m=" + str(m) + " <= " + str(hi));
  }

  bool ok() const {
    return std::all_of(out_.conditions.begin(), out_.conditions.end(), [](const Condition& c) { return c.ok; });
  }

 private:
  HypothesisReport& out_;
};

Rational ptz_upper(int t, int r) {
  const Integer correction = (Integer(1) << (r - 3)) - 1;
  return Rational(binomial_exact(t, r) + binomial_exact(t - 1, r - 1) -
                  correction * (binomial_exact(t - 1, r - 2) - 1));
}

Rational pz_upper(int t) { return Rational(binomial_exact(t, 3) + binomial_exact(t - 1, 2)); }

Rational tpzz_upper(int t) { return pz_upper(t) - Rational(t, 2); }

Rational pair_window_upper(int t) { return Rational(binomial_exact(t, 2) + (t - 2)); }

}  // namespace

std::string to_string(TheoremId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  for (const auto& e : kNames)
    if (name == e.name) return e.id;
  throw InputError("unknown theorem '" + std::string(name) + "'");
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& e : kNames) out.push_back(e.id);
    return out;
  }();
  return ids;
}

Rational TheoremParams::coefficient(int r) const {
  auto it = alpha.find(r);
  return it == alpha.end() ? Rational(1) : it->second;
}

TheoremParams theorem_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("theorem parameters must be a JSON object");
  TheoremParams p;
  try {
    if (j.contains("t")) p.t = j["t"].get<int>();
    if (j.contains("r")) p.r = j["r"].get<int>();
    if (j.contains("types")) {
      const auto& v = j["types"];
      p.types = v.is_string() ? EdgeTypeSet::parse(v.get<std::string>()) : EdgeTypeSet(v.get<std::vector<int>>());
    }
    if (j.contains("strictness_margin")) p.strictness_margin = j["strictness_margin"].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad theorem parameters: ") + e.what());
  }
  if (j.contains("alpha")) {
    // Reuse the coefficient parser; r0 is irrelevant here, so pick one no key uses.
    nlohmann::json wrapped = {{"r0", 1000}, {"alpha", j["alpha"]}};
    p.alpha = exact_coefficients_from_json(wrapped).alphas();
  }
  if (!(p.strictness_margin > 0)) throw InputError("strictness_margin must be positive");
  return p;
}

Rational lambda_prime_of_complete(int t, const EdgeTypeSet& types) {
  if (t < 1) throw InputError("t must be at least 1");
  Rational total = 0;
  for (int s : types) total += Rational(factorial(s)) * density(t, s);
  return total;
}

Rational lambda_prime_closed(TheoremId id, int t, int r) {
  if (t < r) throw InputError("t=" + std::to_string(t) + " is smaller than r=" + std::to_string(r));
  switch (id) {
    case COR1a: case MIXED_T10a: return lambda_prime_of_complete(t, {2, r});
    case COR1b: return lambda_prime_of_complete(t, {1, 2, r});
    case MIXED_T10b: return lambda_prime_of_complete(t, {1, 3});
    default: throw InputError(to_string(id) + " has no lambda' closed form of this shape");
  }
}

Rational closed_form_exact(TheoremId id, const TheoremParams& p) {
  const int t = need_t(p);
  const Rational tq(t);
  switch (id) {
    case MS_T1: return frac(t - 1, 2LL * t);
    case NONUNIF_T3: return 2 - Rational(1, t);
    case ONE_R_T4: {
      const int r = need_r(p, 3);
      return 1 + p.coefficient(r) * r_term(t, r);
    }
    case ONE_TWO_THREE_T5:
      return 1 + p.coefficient(2) * frac(t - 1, 2LL * t) +
             p.coefficient(3) * Rational((t - 1) * (t - 2), 6 * t * t);
    case TWO_R_T6a: case TWO_R_EDGES_T7a: {
      const int r = need_r(p, 3);
      return frac(t - 1, 2LL * t) + p.coefficient(r) * r_term(t, r);
    }
    case ONE_TWO_R_T6b: case ONE_TWO_R_EDGES_T7b: {
      const int r = need_r(p, 3);
      return 1 + p.coefficient(2) * frac(t - 1, 2LL * t) + p.coefficient(r) * r_term(t, r);
    }
    case COR1a: case COR2a: {
      const int r = need_r(p, 3);
      return frac(t - 1, t) + falling(t, r) / pow(tq, r - 1);
    }
    case COR1b: case COR2b: {
      const int r = need_r(p, 3);
      return 1 + frac(t - 1, t) + falling(t, r) / pow(tq, r - 1);
    }
    case GENERAL_T9a: case GENERAL_T9b: {
      const auto types = family_types(id, p);
      const int base = id == GENERAL_T9a ? 2 : 1;
      if (types.min() != base || !types.contains(2))
        throw InputError(to_string(id) + " needs an edge-type set starting " +
                         (base == 2 ? std::string("{2,...}") : std::string("{1,2,...}")));
      Rational total = 0;
      for (int s : types) total += (s == base ? Rational(1) : p.coefficient(s)) * density(t, s);
      return total;
    }
    case MIXED_T10a: case MIXED_T10b: case MIXED_T10c: {
      if (id == MIXED_T10a) need_r(p, 3);
      return lambda_prime_of_complete(t, family_types(id, p));
    }
    case PZ: case TPZZ: return density(t, 3);
    case PTZ: return density(t, need_r(p, 3));
  }
  throw InputError("unknown theorem");
}

double closed_form(TheoremId id, const TheoremParams& params) { return to_double(closed_form_exact(id, params)); }

HypothesisReport check_hypotheses(TheoremId id, const Hypergraph& h, const TheoremParams& params) {
  const TheoremParams p = resolve(id, h, params);
  HypothesisReport out;
  out.t = *p.t;
  out.r = p.r.value_or(0);
  const int t = out.t;
  const int r = out.r;
  const auto family = family_types(id, p);
  out.clique = max_complete_subgraph(h, family).vertices;
  out.m = static_cast<long long>(h.edge_count());

  Checker check(out);
  check.types_within(h, family);
  const Rational tq(t);
  const Rational alpha_r = p.coefficient(r);
  const Rational r2_fact = r >= 2 ? Rational(factorial(r - 2)) : Rational(1);
  const long long pairs = static_cast<long long>(h.edge_count(2));
  const long long pair_support = static_cast<long long>(vertex_support(h, 2).size());

  auto pair_support_is_t = [&] {
    check.add("vertex order of H^2", pair_support == t,
              "|V(H^2)|=" + str(pair_support) + ", t=" + str(t));
  };
  auto pair_window = [&] {
    out.m = pairs;
    check.window("2-edge count window", pairs, Rational(binomial_exact(t, 2)), pair_window_upper(t));
  };

  switch (id) {
    case MS_T1:
      check.clique_order(h, {2}, t, "clique order");
      break;
    case NONUNIF_T3:
      check.clique_order(h, {1, 2}, t, "clique order");
      check.at_least("t threshold", tq, 2);
      // Without this the stated value fails, e.g. a triangle with a single singleton edge.
      check.clique_order(h, {2}, t, "2-clique order");
      break;
    case ONE_R_T4: {
      check.add("r range", r >= 3, "r=" + str(r) + " (the threshold exponent r-3 needs r >= 3)");
      check.clique_order(h, family, t, "clique order");
      check.add("singleton clique order", static_cast<long long>(h.edge_count(1)) == t,
                "|E^1|=" + str(static_cast<long long>(h.edge_count(1))) + ", t=" + str(t));
      if (r >= 3) {
        const Rational base = alpha_r - r2_fact;
        const Rational bound = pow(base, r - 2) / (r2_fact * pow(alpha_r, r - 3));
        check.at_least("t threshold", tq, Rational(ceil(bound)));
      }
      break;
    }
    case ONE_TWO_THREE_T5: {
      const Rational a2 = p.coefficient(2), a3 = p.coefficient(3);
      check.clique_order(h, family, t, "clique order");
      check.add("singleton clique order", static_cast<long long>(h.edge_count(1)) == t,
                "|E^1|=" + str(static_cast<long long>(h.edge_count(1))) + ", t=" + str(t));
      check.at_least("t threshold", tq, Rational(ceil(((a2 + a3) * (a2 + a3) - a3) / (a2 + a3))));
      break;
    }
    case TWO_R_T6a:
      check.clique_order(h, family, t, "clique order");
      pair_support_is_t();
      check.at_least("t threshold", tq, alpha_r / r2_fact + 1);
      out.notes.push_back("threshold uses the level-2 coefficient 1");
      break;
    case ONE_TWO_R_T6b:
      check.clique_order(h, family, t, "clique order");
      pair_support_is_t();
      check.at_least("t threshold", tq, alpha_r / (p.coefficient(2) * r2_fact) + 1);
      break;
    case TWO_R_EDGES_T7a: {
      check.clique_order(h, family, t, "clique order");
      pair_window();
      check.at_least("t threshold", tq, alpha_r / r2_fact + 1);
      const Rational need = alpha_r / (2 * r2_fact);
      check.add("coefficient condition", Rational(1) >= need, "alpha_2=1 >= alpha_r/(2(r-2)!)=" + str(need));
      out.notes.push_back("level-2 coefficient taken as 1");
      break;
    }
    case ONE_TWO_R_EDGES_T7b: {
      const Rational a2 = p.coefficient(2);
      check.clique_order(h, family, t, "clique order");
      pair_window();
      check.at_least("t threshold", tq, alpha_r / (a2 * r2_fact) + 1);
      const Rational weak = alpha_r / (2 * r2_fact), strong = alpha_r / r2_fact;
      check.add("coefficient condition (half)", a2 >= weak,
                "alpha_2=" + str(a2) + " >= alpha_r/(2(r-2)!)=" + str(weak));
      check.add("coefficient condition (full)", a2 >= strong,
                "alpha_2=" + str(a2) + " >= alpha_r/(r-2)!=" + str(strong));
      out.notes.push_back("both stated coefficient conditions are required");
      break;
    }
    case COR1a: case COR1b:
      check.add("r range", r >= 3, "r=" + str(r));
      check.clique_order(h, family, t, "clique order");
      pair_support_is_t();
      check.at_least("t threshold", tq, Rational(r * (r - 1), 2) + 1);
      break;
    case COR2a: case COR2b:
      check.add("r range", r >= 3 && r <= 4, "r=" + str(r) + " must lie in 3..4");
      check.clique_order(h, family, t, "clique order");
      pair_window();
      check.at_least("t threshold", tq, Rational(r * (r - 1), 2) + 1);
      break;
    case GENERAL_T9a: case GENERAL_T9b: {
      const int base = id == GENERAL_T9a ? 2 : 1;
      const bool shape = family.min() == base && family.contains(2) && family.size() >= 2;
      check.add("type set shape", shape,
                family.str() + (base == 2 ? " must be {2,r_3,...}" : " must be {1,2,r_3,...}"));
      check.clique_order(h, family, t, "clique order");
      pair_support_is_t();
      const long long higher =
          std::count_if(family.begin(), family.end(), [](int s) { return s > 2; });
      const int top = family.max();
      const Rational a2 = base == 2 ? Rational(1) : p.coefficient(2);
      if (top >= 3)
        check.at_least("t threshold", tq,
                       Rational(higher) * p.coefficient(top) / (a2 * Rational(factorial(top - 2))) + 1);
      out.notes.push_back("threshold subscript r_l read as the largest type r_m");
      break;
    }
    case MIXED_T10a: {
      check.add("r range", r >= 3, "r=" + str(r));
      out.m = static_cast<long long>(h.edge_count(r));
      if (r >= 3) check.window("r-edge count window", out.m, Rational(binomial_exact(t, r)), ptz_upper(t, r));
      const long long span = static_cast<long long>(vertex_support(h, r).size());
      check.add("r-level vertex count", span <= t + 1, "|V(H^r)|=" + str(span) + " <= t+1=" + str(t + 1));
      check.clique_order(h, family, t, "clique order");
      if (family.contains(1)) check.clique_order(h, {1, 2}, t, "{1,2}-clique order");
      check.clique_order(h, {2}, t, "2-clique order");
      break;
    }
    case MIXED_T10b: {
      out.m = static_cast<long long>(h.edge_count(3));
      check.window("3-edge count window", out.m, Rational(binomial_exact(t, 3)), pz_upper(t));
      check.clique_order(h, family, t, "clique order");
      if (family.contains(2)) {
        check.clique_order(h, {1, 2}, t, "{1,2}-clique order");
        check.clique_order(h, {2}, t, "2-clique order");
      }
      break;
    }
    case MIXED_T10c: {
      out.m = static_cast<long long>(h.edge_count(3));
      check.window("3-edge count window", out.m, Rational(binomial_exact(t, 3)), tpzz_upper(t));
      const bool has_clique = contains_complete(h, t, {3});
      out.strict_branch = !has_clique;
      if (has_clique) check.clique_order(h, family, t, "clique order");
      out.notes.push_back(has_clique ? "K_t^(3) present: equality branch" : "no K_t^(3): strict branch");
      break;
    }
    case PZ:
      out.m = static_cast<long long>(h.edge_count(3));
      check.window("edge count window", out.m, Rational(binomial_exact(t, 3)), pz_upper(t));
      check.clique_order(h, {3}, t, "clique order");
      break;
    case TPZZ:
      out.m = static_cast<long long>(h.edge_count(3));
      out.strict_branch = true;
      check.window("edge count window", out.m, Rational(binomial_exact(t, 3)), tpzz_upper(t));
      check.add("no complete subgraph of order t", !contains_complete(h, t, {3}), "t=" + str(t));
      break;
    case PTZ: {
      check.add("r range", r >= 3, "r=" + str(r));
      out.m = static_cast<long long>(h.edge_count(r));
      if (r >= 3) check.window("edge count window", out.m, Rational(binomial_exact(t, r)), ptz_upper(t, r));
      const long long span = static_cast<long long>(vertex_support(h, r).size());
      check.add("vertex count", span <= t + 1, "|V(H^r)|=" + str(span) + " <= t+1=" + str(t + 1));
      check.clique_order(h, {r}, t, "clique order");
      break;
    }
  }
  out.ok = check.ok();
  return out;
}

TheoremObjective theorem_objective(TheoremId id, const Hypergraph& h, const TheoremParams& params) {
  const TheoremParams p = resolve(id, h, params);
  const auto family = family_types(id, p);
  if (is_lambda_prime(id)) {
    return {lambda_prime_coefficients(family.values()), Rational(factorial(family.min())), true};
  }
  std::map<int, Rational> alpha;
  for (int s : family)
    if (s != family.min()) alpha[s] = p.coefficient(s);
  return {ExactCoefficients(family.min(), std::move(alpha)), Rational(1), false};
}

TheoremVerdict verify(TheoremId id, const Hypergraph& h, const TheoremParams& params, const SolverConfig& cfg,
                      double tol) {
  TheoremVerdict v;
  v.id = id;
  v.tolerance = tol;
  const TheoremParams p = resolve(id, h, params);
  v.hypotheses = check_hypotheses(id, h, p);
  const Rational closed = closed_form_exact(id, p);
  v.closed_form = to_double(closed);
  v.closed_form_exact = to_string(closed);

  const auto objective = theorem_objective(id, h, p);
  const double scale = to_double(objective.scale);
  v.numerical = std::numeric_limits<double>::quiet_NaN();
  v.uniform_on_clique = std::numeric_limits<double>::quiet_NaN();
  try {
    const auto alpha = to_double(objective.alpha);
    const auto result = maximize(h, alpha, cfg);
    v.numerical = scale * result.value;
    v.kkt_residual = result.kkt_residual;
    v.converged = result.converged;
    v.x.assign(result.x.values().begin(), result.x.values().end());
    if (objective.lambda_prime) v.bridge_gap = std::abs(v.numerical - eval_lambda_prime(h, result.x));
  } catch (const MissingCoefficient& e) {
    // H has levels outside the theorem's family; the hypotheses already say so.
    v.hypotheses.notes.push_back(std::string("objective not evaluated: ") + e.what());
  }

  if (!v.hypotheses.clique.empty()) {
    try {
      const auto x = RationalWeightVector::uniform_on(h.order(), v.hypotheses.clique);
      const Rational exact = objective.scale * eval_exact(h, objective.alpha, x);
      v.uniform_on_clique = to_double(exact);
      v.uniform_on_clique_exact = to_string(exact);
      v.uniform_matches_exactly = exact == closed;
    } catch (const MissingCoefficient&) {
    }
  }

  v.observed_gap = v.closed_form - v.numerical;
  if (v.hypotheses.strict_branch) {
    v.margin = p.strictness_margin;
    v.pass = v.hypotheses.ok && v.numerical < v.closed_form - v.margin;
  } else {
    v.pass = v.hypotheses.ok && v.converged && std::abs(v.numerical - v.closed_form) <= tol &&
             v.uniform_matches_exactly;
  }
  return v;
}

nlohmann::json to_json(const TheoremVerdict& v) {
  auto number = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); };
  nlohmann::json conditions = nlohmann::json::array();
  for (const auto& c : v.hypotheses.conditions)
    conditions.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  nlohmann::json j = {
      {"theorem", to_string(v.id)},
      {"hypotheses_ok", v.hypotheses.ok},
      {"conditions", conditions},
      {"notes", v.hypotheses.notes},
      {"t", v.hypotheses.t},
      {"r", v.hypotheses.r},
      {"m", v.hypotheses.m},
      {"clique", v.hypotheses.clique},
      {"closed_form", number(v.closed_form)},
      {"closed_form_exact", v.closed_form_exact},
      {"numerical", number(v.numerical)},
      {"uniform_on_clique", number(v.uniform_on_clique)},
      {"uniform_on_clique_exact", v.uniform_on_clique_exact},
      {"uniform_matches_exactly", v.uniform_matches_exactly},
      {"kkt_residual", v.kkt_residual},
      {"converged", v.converged},
      {"x", v.x},
      {"tolerance", v.tolerance},
      {"strict_branch", v.hypotheses.strict_branch},
      {"observed_gap", number(v.observed_gap)},
      {"pass", v.pass},
  };
  if (v.hypotheses.strict_branch) j["margin"] = v.margin;
  if (v.bridge_gap != 0) j["lambda_prime_bridge_gap"] = v.bridge_gap;
  return j;
}

}  // namespace lagrangian
