#include "lagrangian/generators.hpp"

#include <algorithm>

#include "lagrangian/cliques.hpp"
#include "lagrangian/compression.hpp"
#include "lagrangian/error.hpp"
#include "lagrangian/random.hpp"
#include "lagrangian/theorems.hpp"

namespace lagrangian {

namespace {

std::vector<Edge> subsets(std::span<const Vertex> pool, int k) {
  std::vector<Edge> out;
  for_each_subset(pool, k, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

bool inside_prefix(const Edge& e, int t) { return e.back() <= t; }

// `count` distinct items chosen uniformly from `pool`.
std::vector<Edge> sample(std::vector<Edge> pool, std::size_t count, Rng& rng) {
  rng.shuffle(pool);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void append(std::vector<Edge>& to, std::vector<Edge> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void window_check(bool ok, const std::string& what) {
  if (!ok) throw InfeasibleWindow(what);
}

Hypergraph finish(int n, std::vector<Edge> edges, const GeneratorParams& p) {
  auto h = validate(n, std::move(edges));
  return p.singletons ? with_singletons(h) : h;
}

TheoremParams target_params(const GeneratorParams& p) {
  TheoremParams tp;
  tp.t = p.t;
  tp.r = p.r;
  return tp;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::t6a: return "t6a";
    case Family::t7a: return "t7a";
    case Family::ptz: return "ptz";
    case Family::tpzz_free: return "tpzz-free";
    case Family::random_lc: return "random-lc";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::t6a, Family::t7a, Family::ptz, Family::tpzz_free, Family::random_lc})
    if (name == to_string(f)) return f;
  throw InputError("unknown family '" + std::string(name) + "'");
}

GeneratorParams generator_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("generator parameters must be a JSON object");
  GeneratorParams p;
  try {
    if (j.contains("t")) p.t = j["t"].get<int>();
    if (j.contains("r")) p.r = j["r"].get<int>();
    if (j.contains("n")) p.n = j["n"].get<int>();
    if (j.contains("m")) p.m = j["m"].get<long long>();
    if (j.contains("density")) p.density = j["density"].get<double>();
    if (j.contains("singletons")) p.singletons = j["singletons"].get<bool>();
    if (j.contains("pairs")) p.pairs = j["pairs"].get<bool>();
    if (j.contains("r_level")) {
      const auto mode = j["r_level"].get<std::string>();
      if (mode != "random" && mode != "complete") throw InputError("r_level must be \"random\" or \"complete\"");
      p.complete_r_level = mode == "complete";
    }
    if (j.contains("types")) {
      const auto& v = j["types"];
      p.types = v.is_string() ? EdgeTypeSet::parse(v.get<std::string>()) : EdgeTypeSet(v.get<std::vector<int>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad generator parameters: ") + e.what());
  }
  return p;
}

Hypergraph gen_random(int n, const EdgeTypeSet& types, const std::map<int, double>& density, std::uint64_t seed,
                      double fallback) {
  if (n < 1) throw InputError("vertex count must be positive");
  Rng rng(seed);
  const auto vs = vertex_range(n);
  std::vector<Edge> edges;
  for (int r : types) {
    auto it = density.find(r);
    const double p = it == density.end() ? fallback : it->second;
    if (!(p >= 0 && p <= 1)) throw InputError("densities must lie in [0, 1]");
    for_each_subset(vs, r, [&](std::span<const Vertex> s) {
      if (rng.bernoulli(p)) edges.emplace_back(s.begin(), s.end());
    });
  }
  return validate(n, std::move(edges));
}

Hypergraph gen_planted(Family family, const GeneratorParams& p, std::uint64_t seed) {
  const int t = p.t, r = p.r;
  if (t < 1) throw InputError("t must be positive");
  if (r < 2) throw InputError("r must be at least 2");
  if (!(p.density >= 0 && p.density <= 1)) throw InputError("density must lie in [0, 1]");
  Rng rng(seed);

  if (family == Family::random_lc) {
    const int n = p.n.value_or(t + 2);
    const EdgeTypeSet types = p.types.value_or(EdgeTypeSet{2, r});
    auto h = left_compress_fixpoint(gen_random(n, types, {}, rng.next(), p.density));
    return p.singletons ? with_singletons(h) : h;
  }

  window_check(t >= 2, "t must be at least 2 for planted families");
  const auto prefix = vertex_range(t);

  for (int attempt = 0; attempt < kMaxGeneratorRetries; ++attempt) {
    std::vector<Edge> edges;
    Hypergraph h = validate(1, {});
    bool ok = false;
    switch (family) {
      case Family::t6a: {
        const int n = p.n.value_or(t + 2);
        window_check(t >= r && n >= t, "t6a needs r <= t <= n");
        append(edges, subsets(prefix, 2));
        for (auto& e : subsets(vertex_range(n), r))
          if (inside_prefix(e, t) || p.complete_r_level || rng.bernoulli(p.density)) edges.push_back(std::move(e));
        h = finish(n, std::move(edges), p);
        const auto id = p.singletons ? TheoremId::ONE_TWO_R_T6b : TheoremId::TWO_R_T6a;
        ok = check_hypotheses(id, h, target_params(p)).ok;
        break;
      }
      case Family::t7a: {
        const long long low = static_cast<long long>(binomial(t, 2));
        const long long m = p.m.value_or(low);
        window_check(m >= low && m <= low + t - 2,
                     "t7a needs C(t,2) <= m <= C(t,2)+t-2, got m=" + std::to_string(m));
        const int n = p.n.value_or(t + 1);
        window_check(t >= r && (n >= t + 1 || m == low) && n >= t, "t7a needs r <= t and n >= t+1");
        append(edges, subsets(prefix, 2));
        std::vector<Edge> spokes;
        for (Vertex v : prefix) spokes.push_back({v, t + 1});
        append(edges, sample(std::move(spokes), static_cast<std::size_t>(m - low), rng));
        for (auto& e : subsets(vertex_range(n), r))
          if (inside_prefix(e, t) || p.complete_r_level || rng.bernoulli(p.density)) edges.push_back(std::move(e));
        h = finish(n, std::move(edges), p);
        const auto id = p.singletons ? TheoremId::ONE_TWO_R_EDGES_T7b : TheoremId::TWO_R_EDGES_T7a;
        ok = check_hypotheses(id, h, target_params(p)).ok;
        break;
      }
      case Family::ptz: {
        const long long low = static_cast<long long>(binomial(t, r));
        const long long m = p.m.value_or(low);
        const long long high = low + static_cast<long long>(binomial(t - 1, r - 1)) -
                               ((1LL << std::max(r - 3, 0)) - 1) * (static_cast<long long>(binomial(t - 1, r - 2)) - 1);
        window_check(r >= 3 && t >= r, "ptz needs 3 <= r <= t");
        window_check(m >= low && m <= high, "ptz needs " + std::to_string(low) + " <= m <= " + std::to_string(high) +
                                                ", got m=" + std::to_string(m));
        if (p.n && *p.n != t + 1) throw InputError("ptz instances live on exactly t+1 vertices");
        append(edges, subsets(prefix, r));
        std::vector<Edge> through;
        for (auto e : subsets(prefix, r - 1)) {
          e.push_back(t + 1);
          through.push_back(std::move(e));
        }
        append(edges, sample(std::move(through), static_cast<std::size_t>(m - low), rng));
        if (p.pairs) append(edges, subsets(prefix, 2));
        h = finish(t + 1, std::move(edges), p);
        ok = check_hypotheses(TheoremId::PTZ, level(h, r), target_params(p)).ok;
        break;
      }
      case Family::tpzz_free: {
        const long long low = static_cast<long long>(binomial(t, 3));
        const long long m = p.m.value_or(low);
        const long long twice_high = 2 * (low + static_cast<long long>(binomial(t - 1, 2))) - t;
        window_check(t >= 3 && m >= low && 2 * m <= twice_high,
                     "tpzz-free needs C(t,3) <= m <= C(t,3)+C(t-1,2)-t/2, got m=" + std::to_string(m));
        const int n = p.n.value_or(t + 2);
        window_check(static_cast<long long>(binomial(n, 3)) >= m, "not enough 3-sets on n vertices");
        edges = sample(subsets(vertex_range(n), 3), static_cast<std::size_t>(m), rng);
        h = finish(n, std::move(edges), p);
        ok = !contains_complete(h, t, {3});
        break;
      }
      case Family::random_lc:
        break;
    }
    if (ok) return h;
  }
  throw InfeasibleWindow("no " + to_string(family) + " instance met its hypotheses after " +
                         std::to_string(kMaxGeneratorRetries) + " attempts");
}

}  // namespace lagrangian
