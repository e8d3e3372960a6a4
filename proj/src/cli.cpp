#include "lagrangian/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lagrangian/cliques.hpp"
#include "lagrangian/compression.hpp"
#include "lagrangian/error.hpp"
#include "lagrangian/generators.hpp"
#include "lagrangian/hypergraph_io.hpp"
#include "lagrangian/objective.hpp"
#include "lagrangian/optimizer.hpp"
#include "lagrangian/theorems.hpp"

namespace lagrangian::cli {

namespace {

std::string fixed(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

// Inline JSON when the argument starts with '{', otherwise a file name.
nlohmann::json json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string text = first != std::string::npos && arg[first] == '{' ? arg : read_file(arg);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

struct SolverFlags {
  int starts = SolverConfig{}.starts;
  int grid_d = SolverConfig{}.grid_resolution;
  std::uint64_t seed = default_seed();
  double tol_grad = SolverConfig{}.tol_grad;

  void attach(CLI::App* cmd) {
    cmd->add_option("--starts", starts, "random restarts")->check(CLI::PositiveNumber);
    cmd->add_option("--grid-d", grid_d, "grid resolution D")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "random seed");
  }

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.starts = starts;
    cfg.grid_resolution = grid_d;
    cfg.seed = seed;
    cfg.tol_grad = tol_grad;
    cfg.validate();
    return cfg;
  }
};

nlohmann::json result_json(const OptimizationResult& r, double value) {
  return {{"value", value},
          {"x", std::vector<double>(r.x.values().begin(), r.x.values().end())},
          {"support", r.support},
          {"order", r.order},
          {"kkt_residual", r.kkt_residual},
          {"method", to_string(r.method)},
          {"iterations", r.iterations},
          {"converged", r.converged}};
}

struct ComputeArgs {
  std::string input;
  std::string objective = "lambda";
  std::string coeffs;
  std::string solver = "multistart";
  bool json = false;
  SolverFlags solver_flags;
};

int do_compute(const ComputeArgs& a, std::ostream& out) {
  const auto h = read_hypergraph(a.input);
  double scale = 1;
  Coefficients alpha = unit_coefficients(h);
  if (a.objective == "lambda-prime") {
    const auto types = h.edge_types();
    alpha = to_double(lambda_prime_coefficients(types));
    if (!types.empty()) scale = to_double(Rational(factorial(types.front())));
  } else if (a.objective == "weighted") {
    if (a.coeffs.empty()) throw InputError("--objective weighted needs --coeffs");
    alpha = coefficients_from_json(json_arg(a.coeffs));
  } else if (a.objective != "lambda") {
    throw InputError("unknown objective '" + a.objective + "'");
  }
  if (!a.coeffs.empty() && a.objective != "weighted") throw InputError("--coeffs applies to --objective weighted");

  const auto cfg = a.solver_flags.config();
  OptimizationResult best;
  if (a.solver == "multistart" || a.solver == "combined") best = maximize(h, alpha, cfg);
  if (a.solver == "grid" || a.solver == "combined") {
    const auto grid = grid_oracle(h, alpha, cfg.grid_resolution, cfg);
    if (a.solver == "grid" || grid.polished_value > best.value + cfg.tol_value) {
      best.value = grid.polished_value;
      best.x = grid.polished_x;
      best.support.clear();
      for (std::size_t i = 0; i < best.x.size(); ++i)
        if (best.x[i] > cfg.support_epsilon) best.support.push_back(static_cast<Vertex>(i + 1));
      best.kkt_residual = kkt_residual(h, alpha, best.x, cfg.support_epsilon);
      best.method = a.solver == "grid" ? SolveMethod::grid : SolveMethod::combined;
      best.converged = true;
      best.order = vertex_range(h.order());
      std::stable_sort(best.order.begin(), best.order.end(),
                       [&](Vertex u, Vertex v) { return best.x[u - 1] > best.x[v - 1]; });
    }
  } else if (a.solver != "multistart") {
    throw InputError("unknown solver '" + a.solver + "'");
  }

  const double value = scale * best.value;
  if (a.json) {
    auto j = result_json(best, value);
    j["objective"] = a.objective;
    j["hash"] = canonical_hash(h);
    out << j.dump() << '\n';
  } else {
    out << fixed(value) << '\n';
  }
  return kExitOk;
}

std::string verdict_text(const TheoremVerdict& v) {
  std::ostringstream s;
  s << "theorem " << to_string(v.id) << '\n';
  for (const auto& c : v.hypotheses.conditions)
    s << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
  for (const auto& n : v.hypotheses.notes) s << "  note: " << n << '\n';
  s << "hypotheses_ok " << (v.hypotheses.ok ? "true" : "false") << '\n';
  s << "closed_form " << fixed(v.closed_form) << " (" << v.closed_form_exact << ")\n";
  s << "numerical " << fixed(v.numerical) << '\n';
  s << "uniform_on_clique " << fixed(v.uniform_on_clique) << '\n';
  s << "kkt_residual " << v.kkt_residual << '\n';
  if (v.hypotheses.strict_branch)
    s << "strict gap " << fixed(v.observed_gap) << " (margin " << v.margin << ")\n";
  s << (v.pass ? "PASS" : "FAIL") << '\n';
  return s.str();
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw InputError("malformed seed range '" + text + "'");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto s = number(text);
    return {s, s};
  }
  const auto lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
  if (hi < lo) throw InputError("seed range '" + text + "' is empty");
  return {lo, hi};
}

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  std::vector<TheoremId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ids.push_back(parse_theorem_id(item));
  if (ids.empty()) throw InputError("no theorem given");
  return ids;
}

struct SweepArgs {
  std::string family;
  std::string theorems;
  std::string seeds = "1..10";
  std::string params;
  std::string out_path;
  unsigned jobs = 0;
  double tol = 1e-6;
  SolverFlags solver_flags;
};

int do_sweep(const SweepArgs& a, std::ostream& out) {
  const auto family = parse_family(a.family);
  const auto ids = parse_theorem_list(a.theorems);
  const auto [lo, hi] = parse_seed_range(a.seeds);
  const auto pj = a.params.empty() ? nlohmann::json::object() : json_arg(a.params);
  const auto gen = generator_params_from_json(pj);
  const auto tp = theorem_params_from_json(pj);
  const auto cfg = a.solver_flags.config();

  const std::size_t instances = static_cast<std::size_t>(hi - lo + 1);
  const std::size_t total = instances * ids.size();
  std::vector<std::string> rows(total);
  std::vector<std::string> errors(total);
  std::vector<char> passed(total, 0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < total;) {
      const std::uint64_t seed = lo + k / ids.size();
      const TheoremId id = ids[k % ids.size()];
      try {
        const auto h = gen_planted(family, gen, seed);
        const auto start = std::chrono::steady_clock::now();
        const auto v = verify(id, h, tp, cfg, a.tol);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream row;
        row << a.family << ',' << seed << ',' << to_string(id) << ',' << v.hypotheses.t << ',' << v.hypotheses.r
            << ',' << v.hypotheses.m << ',' << (v.hypotheses.ok ? "true" : "false") << ',' << fixed(v.closed_form)
            << ',' << fixed(v.numerical) << ',' << fixed(v.uniform_on_clique) << ',' << v.kkt_residual << ','
            << (v.pass ? "true" : "false") << ',' << static_cast<long long>(std::llround(ms));
        rows[k] = row.str();
        passed[k] = v.pass;
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, total));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t k = 0; k < total; ++k)
    if (!errors[k].empty())
      throw InputError("seed " + std::to_string(lo + k / ids.size()) + ": " + errors[k]);

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw InputError("cannot write " + a.out_path);
  }
  std::ostream& csv = a.out_path.empty() ? out : file;
  csv << "family,seed,theorem,t,r,m,hypotheses_ok,closed_form,numerical,uniform_on_clique,kkt_residual,pass,wall_ms\n";
  for (const auto& row : rows) csv << row << '\n';
  const bool all = std::all_of(passed.begin(), passed.end(), [](char p) { return p != 0; });
  if (!a.out_path.empty())
    out << std::count(passed.begin(), passed.end(), 1) << '/' << total << " passed\n";
  return all ? kExitOk : kExitVerdictFailed;
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LAGRANGIAN_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("LAGRANGIAN_LAB_SEED is not an integer: ") + env);
    }
  }
  return kDefaultSeed;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    CLI::App app{"Lagrangians of non-uniform hypergraphs and weighted polynomial programs over the simplex",
                 "lagrangian"};
    app.require_subcommand(1);
    int status = kExitOk;

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "maximize an objective over the simplex");
    c->add_option("input", compute.input, "hypergraph file (JSON or text)")->required();
    c->add_option("--objective", compute.objective, "lambda | lambda-prime | weighted");
    c->add_option("--coeffs", compute.coeffs, "coefficients JSON (inline or file)");
    c->add_option("--solver", compute.solver, "multistart | grid | combined");
    c->add_option("--tol", compute.solver_flags.tol_grad, "stationarity tolerance");
    c->add_flag("--json", compute.json, "emit JSON");
    compute.solver_flags.attach(c);

    std::string clique_input, clique_types;
    auto* q = app.add_subcommand("clique", "maximum complete T-subgraph");
    q->add_option("input", clique_input, "hypergraph file")->required();
    q->add_option("--types", clique_types, "edge types, e.g. 2,3 (default: T(H))");
    q->add_flag("--json", "accepted for symmetry; output is always JSON");

    std::string compress_input, compress_out, compress_format = "json", compress_pair;
    bool compress_check = false, compress_fix = false;
    auto* k = app.add_subcommand("compress", "left-compression");
    k->add_option("input", compress_input, "hypergraph file")->required();
    auto* check_flag = k->add_flag("--check", compress_check, "report whether H is left-compressed");
    auto* fix_flag = k->add_flag("--fixpoint", compress_fix, "compress until left-compressed");
    auto* pair_opt = k->add_option("--pair", compress_pair, "apply a single C_{i<-j}, given as i,j");
    check_flag->excludes(fix_flag)->excludes(pair_opt);
    fix_flag->excludes(pair_opt);
    k->add_option("-o,--output", compress_out, "write the result here");
    k->add_option("--format", compress_format, "json | text")->check(CLI::IsMember({"json", "text"}));

    std::string theorem, verify_input, verify_params;
    double verify_tol = 1e-6;
    bool verify_json = false;
    SolverFlags verify_solver;
    auto* v = app.add_subcommand("verify", "check a theorem on one instance");
    v->add_option("--theorem", theorem, "theorem id, e.g. NONUNIF_T3")->required();
    v->add_option("--input", verify_input, "hypergraph file")->required();
    v->add_option("--params", verify_params, "theorem parameters JSON (inline or file)");
    v->add_option("--tol", verify_tol, "verdict tolerance");
    v->add_flag("--json", verify_json, "emit JSON");
    verify_solver.attach(v);

    std::string gen_family, gen_params, gen_out, gen_format = "json";
    std::uint64_t gen_seed = default_seed();
    auto* g = app.add_subcommand("generate", "build a planted or random instance");
    g->add_option("--family", gen_family, "t6a | t7a | ptz | tpzz-free | random-lc")->required();
    g->add_option("--params", gen_params, "generator parameters JSON (inline or file)");
    g->add_option("--seed", gen_seed, "random seed");
    g->add_option("-o,--output", gen_out, "output file (default: stdout)");
    g->add_option("--format", gen_format, "json | text")->check(CLI::IsMember({"json", "text"}));

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "verify theorems over generated instances");
    s->add_option("--family", sweep.family, "generator family")->required();
    s->add_option("--theorem", sweep.theorems, "comma-separated theorem ids")->required();
    s->add_option("--seeds", sweep.seeds, "seed range a..b");
    s->add_option("--params", sweep.params, "shared generator/theorem parameters JSON");
    s->add_option("--out", sweep.out_path, "CSV output file (default: stdout)");
    s->add_option("--jobs", sweep.jobs, "worker threads (default: logical cores)");
    s->add_option("--tol", sweep.tol, "verdict tolerance");
    sweep.solver_flags.attach(s);

    std::vector<const char*> argv{"lagrangian"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      app.exit(e, out, err);
      return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
      app.exit(e, out, err);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      app.exit(e, out, err);
      return kExitInputError;
    }

    if (c->parsed()) {
      status = do_compute(compute, out);
    } else if (q->parsed()) {
      const auto h = read_hypergraph(clique_input);
      const auto present = h.edge_types();
      if (clique_types.empty() && present.empty()) throw InputError("empty hypergraph: pass --types");
      const auto types = clique_types.empty() ? EdgeTypeSet(present) : EdgeTypeSet::parse(clique_types);
      const auto res = max_complete_subgraph(h, types);
      out << nlohmann::json{{"order", res.order}, {"vertices", res.vertices}, {"unique", res.is_unique_max}}.dump()
          << '\n';
    } else if (k->parsed()) {
      const auto h = read_hypergraph(compress_input);
      if (compress_check) {
        out << (is_left_compressed(h) ? "true" : "false") << '\n';
      } else {
        Hypergraph result = h;
        if (compress_fix) {
          const auto fp = left_compress(h);
          result = fp.graph;
          err << "steps " << fp.steps << '\n';
        } else if (!compress_pair.empty()) {
          const auto comma = compress_pair.find(',');
          if (comma == std::string::npos) throw InputError("--pair expects i,j");
          int i = 0, j = 0;
          try {
            i = std::stoi(compress_pair.substr(0, comma));
            j = std::stoi(compress_pair.substr(comma + 1));
          } catch (const std::exception&) {
            throw InputError("--pair expects i,j");
          }
          result = compress_hypergraph(h, i, j);
        } else {
          throw InputError("compress needs --check, --fixpoint or --pair");
        }
        if (!compress_out.empty()) {
          write_hypergraph(result, compress_out, compress_format == "text");
          out << canonical_hash(result) << '\n';
        } else {
          out << (compress_format == "text" ? to_text(result) : to_json(result).dump() + "\n");
        }
      }
    } else if (v->parsed()) {
      const auto id = parse_theorem_id(theorem);
      const auto h = read_hypergraph(verify_input);
      const auto params = verify_params.empty() ? TheoremParams{} : theorem_params_from_json(json_arg(verify_params));
      const auto verdict = verify(id, h, params, verify_solver.config(), verify_tol);
      if (verify_json) {
        out << to_json(verdict).dump() << '\n';
      } else {
        out << verdict_text(verdict);
      }
      status = verdict.pass ? kExitOk : kExitVerdictFailed;
    } else if (g->parsed()) {
      const auto family = parse_family(gen_family);
      const auto params = gen_params.empty() ? GeneratorParams{} : generator_params_from_json(json_arg(gen_params));
      const auto h = gen_planted(family, params, gen_seed);
      if (!gen_out.empty()) {
        write_hypergraph(h, gen_out, gen_format == "text");
        out << canonical_hash(h) << '\n';
      } else {
        out << (gen_format == "text" ? to_text(h) : to_json(h).dump() + "\n");
      }
    } else if (s->parsed()) {
      status = do_sweep(sweep, out);
    }
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace lagrangian::cli
