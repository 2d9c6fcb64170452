#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "sfmlab/adversary_2n.hpp"
#include "sfmlab/cost_based.hpp"
#include "sfmlab/cut_dimension.hpp"
#include "sfmlab/errors.hpp"
#include "sfmlab/graph_learning.hpp"
#include "sfmlab/hyperedge_system.hpp"
#include "sfmlab/permutation_family.hpp"
#include "sfmlab/perturbation.hpp"
#include "sfmlab/random_instances.hpp"
#include "sfmlab/serialization.hpp"
#include "sfmlab/set_function_checks.hpp"
#include "sfmlab/sfm_solvers.hpp"

namespace sfmlab::cli {

namespace {

struct Options {
  int n = 0;
  int k = 0;
  int u_star = 1;
  std::uint64_t seed = 1;
  int trials = 0;
  std::string mode = "undirected";
  bool nontrivial = false;
  std::string construction;
  std::string instance;
  std::string solver;
  std::string format = "json";
  std::string out;
};

struct Report {
  Json body;
  bool pass = true;
};

// Thrown for flag combinations CLI11 cannot express on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

int trials_or(const Options& o, int fallback) {
  require(o.trials >= 0, "--trials must be non-negative");
  return o.trials > 0 ? o.trials : fallback;
}

Instance resolve_instance(const Options& o) { return load_instance(o.instance); }

WeightedGraph instance_graph(const Options& o) {
  Instance inst = resolve_instance(o);
  auto* g = std::get_if<WeightedGraph>(&inst);
  require(g != nullptr, o.instance + " does not hold a graph");
  return *g;
}

std::pair<SetFunction, int> instance_function(const Instance& inst) {
  if (const auto* p = std::get_if<PermutationInstance>(&inst)) return {p->as_function(), p->n()};
  if (const auto* c = std::get_if<CostBasedInstance>(&inst)) return {c->as_function(), c->n()};
  const auto& g = std::get<WeightedGraph>(inst);
  return {[g](const Subset& s) { return g.cut_value(s); }, g.ground_size()};
}

Json violation_json(const SubmodularityViolation& v) {
  Json j;
  j["x"] = subset_to_json(v.x);
  j["y"] = subset_to_json(v.y);
  return j;
}

// ---------------------------------------------------------------- check-submodular

Report check_submodular_cmd(const Options& o) {
  Report r;
  Json& j = r.body;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<Json> first;
  auto check = [&](const SetFunction& f, int n, const Json& label) {
    ++checked;
    if (auto v = check_submodular(f, n)) {
      ++violations;
      if (!first) {
        first = violation_json(*v);
        (*first)["instance"] = label;
      }
    }
  };

  if (!o.instance.empty()) {
    Instance inst = resolve_instance(o);
    auto [f, n] = instance_function(inst);
    j["source"] = o.instance;
    j["n"] = n;
    check(f, n, Json(o.instance));
  } else if (o.construction == "permutation") {
    require(o.n >= 1 && o.n <= 16, "--n must be in [1, 16] for the permutation construction");
    j["construction"] = "permutation";
    j["n"] = o.n;
    if (o.n <= 5 && o.trials == 0) {
      j["enumeration"] = "exhaustive";
      std::vector<int> sigma(static_cast<std::size_t>(o.n));
      std::iota(sigma.begin(), sigma.end(), 1);
      do {
        for (Subset::Mask cm = 0; cm < (Subset::Mask{1} << (o.n + 1)); ++cm) {
          std::vector<int> c;
          for (int i = 0; i <= o.n; ++i) c.push_back(static_cast<int>((cm >> i) & 1u));
          PermutationInstance p(o.n, sigma, c);
          check(p.as_function(), o.n, to_json(p));
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    } else {
      const int trials = trials_or(o, 32);
      j["enumeration"] = "random";
      j["seed"] = o.seed;
      for (int t = 0; t < trials; ++t) {
        Rng rng(o.seed + static_cast<std::uint64_t>(t));
        PermutationInstance p = random_permutation_instance(o.n, rng);
        check(p.as_function(), o.n, to_json(p));
      }
    }
  } else if (o.construction == "pair-family") {
    require(o.n >= 4 && o.n <= 16, "--n must be in [4, 16] for the pair family");
    j["construction"] = "pair-family";
    j["n"] = o.n;
    const PairFamily family(o.n);
    check(family.base().as_function(), o.n, to_json(family.base()));
    for (const auto& [ij, f] : family.variants()) check(f.as_function(), o.n, to_json(f));
  } else {
    throw UsageError("check-submodular needs --instance or --construction {permutation,pair-family}");
  }
  j["instances_checked"] = checked;
  j["violations"] = violations;
  if (first) j["first_violation"] = *first;
  r.pass = violations == 0;
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- adversary-2n

// Runs `inner` against an oracle that stops answering after `budget` queries
// and then commits to the smallest value seen.
MinValueSolver with_budget(MinValueSolver inner, std::size_t budget) {
  return [inner = std::move(inner), budget](ValueOracle& outer) {
    struct Exhausted {};
    ValueOracle limited(outer.ground_size(), [&outer, budget](const Subset& s) {
      if (outer.query_count() >= budget) throw Exhausted{};
      return outer.evaluate(s);
    });
    try {
      return inner(limited);
    } catch (const Exhausted&) {
      std::optional<Rational> best;
      for (const auto& rec : outer.transcript().entries()) {
        if (!best || rec.value < *best) best = rec.value;
      }
      return best.value_or(Rational(0));
    }
  };
}

MinValueSolver chain_solver(const std::string& name, int n) {
  MinValueSolver brute = [](ValueOracle& o) { return brute_force_sfm(o, false).min_value; };
  MinValueSolver two_n = [](ValueOracle& o) { return solve_permutation_family(o).min_value; };
  if (name == "brute") return brute;
  if (name == "2n") return two_n;
  if (name == "truncated") return with_budget(two_n, static_cast<std::size_t>(2 * n - 1));
  throw UsageError("--solver must be one of brute, 2n, truncated");
}

Report adversary_2n_cmd(const Options& o) {
  require(o.n >= 2 && o.n <= 16, "--n must be in [2, 16]");
  const std::string solver = o.solver.empty() ? "2n" : o.solver;
  const Game2nReport g = play_2n_game(o.n, chain_solver(solver, o.n));
  Report r;
  Json& j = r.body;
  j["n"] = g.n;
  j["solver"] = solver;
  j["queries_used"] = g.queries_used;
  j["distinct_important"] = g.distinct_important;
  j["decoy_count"] = g.decoy_count;
  j["useless_count"] = g.useless_count;
  j["guess"] = to_string(g.guess);
  j["true_minimum"] = to_string(g.true_minimum);
  j["verdict"] = to_string(g.verdict);
  j["transcript_replays"] = g.transcript_replays;
  j["decoy_bound_held"] = g.decoy_bound_held;
  j["instance"] = to_json(g.completed);
  const bool starved = g.queries_used < static_cast<std::size_t>(2 * o.n) ||
                       g.distinct_important < static_cast<std::size_t>(o.n + 1);
  r.pass = g.transcript_replays && g.decoy_bound_held && (!starved || g.verdict == Verdict::kFooled);
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- adversary-pairs

Report adversary_pairs_cmd(const Options& o) {
  require(o.n >= 4 && o.n <= 16, "--n must be in [4, 16]");
  const std::string solver = o.solver.empty() ? "brute" : o.solver;
  require(solver == "brute" || solver == "truncated", "--solver must be one of brute, truncated");
  const PairFamily family(o.n);
  ValueOracle oracle(o.n, family.base().as_function());

  // "truncated" scans every nontrivial set except the last co-pair.
  const Subset skipped = PairFamily::co_pair(o.n, o.n - 1, o.n);
  std::optional<Rational> guess;
  for_each_subset(o.n, [&](const Subset& s) {
    if (!s.is_nontrivial() || (solver == "truncated" && s == skipped)) return;
    Rational v = oracle.evaluate(s);
    if (!guess || v < *guess) guess = std::move(v);
  });

  std::set<Subset> co_pairs_seen;
  for (const auto& rec : oracle.transcript().entries()) {
    if (rec.set.size() == o.n - 2) co_pairs_seen.insert(rec.set);
  }
  const std::size_t required = static_cast<std::size_t>(o.n) * static_cast<std::size_t>(o.n - 1) / 2;
  const auto fooling = adversary_pairs(oracle.transcript(), *guess, family);

  Report r;
  Json& j = r.body;
  j["n"] = o.n;
  j["solver"] = solver;
  j["queries_used"] = oracle.query_count();
  j["co_pair_queries"] = co_pairs_seen.size();
  j["required"] = required;
  j["guess"] = to_string(*guess);
  j["fooled"] = fooling.has_value();
  bool consistent = true;
  if (fooling) {
    if (fooling->variant) {
      j["variant"] = Json::array({fooling->variant->first, fooling->variant->second});
    } else {
      j["variant"] = nullptr;
    }
    ValueOracle check(o.n, fooling->instance.as_function());
    const Rational true_min = brute_force_sfm(check, true).min_value;
    consistent = oracle.transcript().replays_against(fooling->instance.as_function()) &&
                 true_min == fooling->nontrivial_minimum && true_min != *guess;
    j["fooling_minimum"] = to_string(fooling->nontrivial_minimum);
  }
  j["consistent"] = consistent;
  r.pass = consistent && (co_pairs_seen.size() >= required || fooling.has_value());
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- solve

Report solve_cmd(const Options& o) {
  Instance inst = [&]() -> Instance {
    if (!o.instance.empty()) return resolve_instance(o);
    require(o.construction == "permutation", "solve needs --instance or --construction permutation");
    require(o.n >= 1 && o.n <= 16, "--n must be in [1, 16]");
    Rng rng(o.seed);
    return random_permutation_instance(o.n, rng);
  }();
  auto [f, n] = instance_function(inst);
  const std::string solver = o.solver.empty() ? "brute" : o.solver;
  bool nontrivial = o.nontrivial;
  ValueOracle oracle(n, f);
  SolverResult result{0, Subset::empty(n), 0};
  bool within_bound = true;
  if (solver == "brute") {
    result = brute_force_sfm(oracle, nontrivial);
  } else if (solver == "reduction") {
    nontrivial = true;
    result = nontrivial_via_reduction(oracle);
  } else if (solver == "queyranne") {
    nontrivial = true;
    result = queyranne_minimize(oracle, n <= 12);
    within_bound = result.queries_used <= queyranne_query_bound(n);
  } else if (solver == "permutation") {
    require(std::holds_alternative<PermutationInstance>(inst), "--solver permutation needs a permutation instance");
    require(!nontrivial, "--solver permutation minimizes over all sets");
    const PermutationSolve s = solve_permutation_family(oracle);
    result = SolverResult{s.min_value, s.argmin, s.queries_used};
    within_bound = s.queries_used == static_cast<std::size_t>(2 * n);
  } else {
    throw UsageError("--solver must be one of brute, reduction, queyranne, permutation");
  }
  ValueOracle reference(n, f);
  const Rational expected = brute_force_sfm(reference, nontrivial).min_value;

  Report r;
  Json& j = r.body;
  j["solver"] = solver;
  j["n"] = n;
  j["nontrivial"] = nontrivial;
  j["result"] = to_json(result);
  j["brute_force_minimum"] = to_string(expected);
  j["query_bound_held"] = within_bound;
  r.pass = result.min_value == expected && f(result.argmin) == expected && within_bound;
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- cutdim / perturb / span-bound

WeightedGraph triangle() {
  return WeightedGraph(3, CutMode::kUndirected, {{1, 2, Rational(1)}, {2, 3, Rational(1)}, {1, 3, Rational(1)}});
}

WeightedGraph construction_graph(const Options& o) {
  if (o.construction == "star-matching") {
    require(o.n >= 3 && o.n <= 16, "--n must be in [3, 16] for star-matching");
    return build_star_matching_graph(o.n);
  }
  if (o.construction == "triangle") return triangle();
  throw UsageError("need --instance or --construction {star-matching,triangle}");
}

Report cutdim_cmd(const Options& o) {
  Report r;
  Json& j = r.body;
  if (o.instance.empty() && o.construction == "star-matching") {
    const WeightedGraph g = construction_graph(o);
    auto [sys, w] = cut_system_from_graph(g);
    const int d = cut_dimension(sys, w, true).d;
    const int expected = star_matching_expected_dimension(o.n);
    r.pass = d == expected;
    j["d"] = d;
    j["expected"] = expected;
    j["pass"] = r.pass;
    return r;
  }
  const WeightedGraph g = o.instance.empty() ? construction_graph(o) : instance_graph(o);
  auto [sys, w] = cut_system_from_graph(g);
  const CutDimension cd = cut_dimension(sys, w, o.nontrivial);
  j["n"] = sys.n();
  j["nontrivial"] = o.nontrivial;
  j["d"] = cd.d;
  j["minimizers"] = cd.minimizers.sets.size();
  j["min_value"] = to_string(cd.minimizers.min_value);
  Json basis = Json::array();
  for (const auto& s : cd.basis) basis.push_back(subset_to_json(s));
  j["basis"] = std::move(basis);
  r.pass = o.nontrivial || cd.d <= sys.n() + 1;
  j["pass"] = r.pass;
  return r;
}

Report perturb_cmd(const Options& o) {
  const WeightedGraph g = o.instance.empty() ? construction_graph(o) : instance_graph(o);
  const bool nontrivial = o.nontrivial || o.construction == "star-matching" || o.construction == "triangle";
  const int trials = trials_or(o, 200);
  auto [sys, w] = cut_system_from_graph(g);
  const EquivalenceReport e = verify_equivalence(sys, w, nontrivial, trials, o.seed);
  const PerturbationBox box = compute_epsilon0(sys, w, nontrivial);

  Report r;
  Json& j = r.body;
  j["n"] = e.n;
  j["nontrivial"] = nontrivial;
  j["d"] = e.d;
  j["epsilon0"] = to_string(box.epsilon0);
  j["seed"] = o.seed;
  j["trials"] = e.trials;
  j["witnesses_found"] = e.witnesses_found;
  j["basis_blocks_witness"] = e.basis_blocks_witness;
  j["gram_full_rank"] = e.gram_full_rank;
  if (e.sample) {
    Json queries = Json::array();
    for (const auto& q : e.sample_queries) queries.push_back(subset_to_json(q));
    j["sample_queries"] = std::move(queries);
    j["witness"] = to_json(*e.sample);
  }
  j["failures"] = e.failures;
  r.pass = e.pass;
  j["pass"] = r.pass;
  return r;
}

CutMode mode_of(const Options& o) {
  try {
    return parse_cut_mode(o.mode);
  } catch (const Error&) {
    throw UsageError("--mode must be one of undirected, directed, st");
  }
}

Json span_row(const WeightedGraph& g, const SpanBoundReport& s) {
  Json row;
  row["n"] = s.n;
  row["d"] = s.dimension;
  row["base_set_count"] = s.base_set_count;
  row["minimizer_count"] = s.minimizer_count;
  row["within_n_plus_1"] = s.dimension <= s.n + 1;
  row["failure"] = s.failure ? Json(to_string(*s.failure)) : Json(nullptr);
  row["pass"] = s.pass && s.dimension <= s.n + 1;
  row["graph"] = to_json(g);
  return row;
}

Report span_bound_cmd(const Options& o) {
  std::vector<WeightedGraph> graphs;
  Report r;
  Json& j = r.body;
  if (!o.instance.empty()) {
    graphs.push_back(instance_graph(o));
  } else {
    require(o.n >= 3 && o.n <= 10, "--n (vertex count) must be in [3, 10]");
    const CutMode mode = mode_of(o);
    const int trials = trials_or(o, 1);
    j["mode"] = to_string(mode);
    j["seed"] = o.seed;
    for (int t = 0; t < trials; ++t) {
      Rng rng(o.seed + static_cast<std::uint64_t>(t));
      graphs.push_back(random_graph(o.n, mode, rng));
    }
  }
  Json rows = Json::array();
  for (const auto& g : graphs) {
    auto [sys, w] = cut_system_from_graph(g);
    Json row = span_row(g, verify_span_bound(sys, w, o.nontrivial));
    r.pass = r.pass && row["pass"].get<bool>();
    rows.push_back(std::move(row));
  }
  j["instances"] = std::move(rows);
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- learn-graph

Json learn_row(const WeightedGraph& g) {
  Json row;
  const int n = g.num_vertices();
  ValueOracle oracle(n, [&g](const Subset& s) { return g.cut_value(s); });
  row["n_vertices"] = n;
  if (g.mode() == CutMode::kUndirected) {
    const WeightedGraph learned = learn_undirected(oracle);
    const std::size_t budget = static_cast<std::size_t>(n + n * (n - 1) / 2);
    const bool exact = aggregate_weights(learned) == aggregate_weights(g);
    row["queries_used"] = oracle.query_count();
    row["query_budget"] = budget;
    row["exact"] = exact;
    row["pass"] = exact && oracle.query_count() == budget;
    row["learned"] = to_json(learned);
  } else {
    CycleEquivalenceCertificate cert = learn_directed_up_to_cycles(oracle);
    cert.explain_against(g);
    row["queries_used"] = cert.queries_used;
    row["cut_equivalent"] = cert.agrees_on_all_cuts;
    row["cycle_shifts_to_reference"] = cert.residual.size();
    row["pass"] = cert.verified && cert.agrees_on_all_cuts;
    row["learned"] = to_json(cert.learned);
  }
  return row;
}

Report learn_graph_cmd(const Options& o) {
  std::vector<WeightedGraph> graphs;
  Report r;
  Json& j = r.body;
  if (!o.instance.empty()) {
    graphs.push_back(instance_graph(o));
    require(graphs.front().mode() != CutMode::kSt, "learn-graph handles global cut modes only");
  } else {
    const CutMode mode = mode_of(o);
    require(mode != CutMode::kSt, "learn-graph handles --mode undirected or directed");
    require(o.n >= 2 && o.n <= 12, "--n (vertex count) must be in [2, 12]");
    j["mode"] = to_string(mode);
    j["seed"] = o.seed;
    const int trials = trials_or(o, 1);
    for (int t = 0; t < trials; ++t) {
      Rng rng(o.seed + static_cast<std::uint64_t>(t));
      graphs.push_back(random_graph(o.n, mode, rng));
    }
  }
  Json rows = Json::array();
  for (const auto& g : graphs) {
    Json row = learn_row(g);
    r.pass = r.pass && row["pass"].get<bool>();
    rows.push_back(std::move(row));
  }
  j["instances"] = std::move(rows);
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- st-kernel

Report st_kernel_cmd(const Options& o) {
  require(o.k >= 2 && o.k <= kStKernelScanLimit, "--k must be in [2, 20]");
  require(o.u_star >= 1 && o.u_star <= o.k, "--u must be in [1, k]");
  const StKernelVector kernel = *st_kernel_vector(o.k, o.u_star);
  const StKernelScan scan = scan_st_kernel(kernel);
  Report r;
  Json& j = r.body;
  j["k"] = o.k;
  j["u_star"] = o.u_star;
  j["beta"] = rationals_to_json(kernel.beta);
  j["inner_products"] = rationals_to_json(scan.inner_products);
  j["all_zero"] = scan.all_zero;
  j["source_edge_product"] = to_string(scan.source_edge_product);
  j["sink_edge_product"] = to_string(scan.sink_edge_product);
  j["minus_one_over_k_product"] = to_string(scan.minus_one_over_k_product);
  bool indistinguishable = true;
  if (o.k <= 12) {
    const auto [a, b] = make_st_indistinguishable_pair(o.k, o.u_star);
    const auto weight_su = [&](const WeightedGraph& g) { return aggregate_weights(g).at({1, o.u_star + 2}); };
    indistinguishable = !cut_equivalent(a, b).has_value() && weight_su(a) != weight_su(b);
    j["pair_indistinguishable"] = indistinguishable;
  }
  r.pass = scan.all_zero && scan.source_edge_product == 1 && indistinguishable;
  j["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- search-cutdim

Report search_cutdim_cmd(const Options& o) {
  require(o.n >= 3 && o.n <= 10, "--n (vertex count) must be in [3, 10]");
  const int trials = trials_or(o, 100);
  int best = -1;
  std::optional<WeightedGraph> best_graph;
  std::map<int, int> histogram;
  for (int t = 0; t < trials; ++t) {
    Rng rng(o.seed + static_cast<std::uint64_t>(t));
    WeightedGraph g = random_graph(o.n, CutMode::kUndirected, rng);
    auto [sys, w] = cut_system_from_graph(g);
    const int d = cut_dimension(sys, w, true).d;
    ++histogram[d];
    if (d > best) {
      best = d;
      best_graph = std::move(g);
    }
  }
  Report r;
  Json& j = r.body;
  j["n"] = o.n;
  j["seed"] = o.seed;
  j["trials"] = trials;
  j["best_d"] = best;
  j["star_matching_d"] = star_matching_expected_dimension(o.n);
  Json hist = Json::object();
  for (const auto& [d, count] : histogram) hist[std::to_string(d)] = count;
  j["histogram"] = std::move(hist);
  j["best_graph"] = to_json(*best_graph);
  j["pass"] = true;
  return r;
}

// ---------------------------------------------------------------- output

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& x : v) {
      if (!joined.empty()) joined += ';';
      joined += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return joined;
  }
  return v.dump();
}

bool csv_scalar(const Json& v) {
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
  return v.is_primitive();
}

std::string to_csv(const Json& report) {
  std::vector<Json> rows;
  if (report.contains("instances")) {
    for (const auto& row : report["instances"]) rows.push_back(row);
  } else {
    rows.push_back(report);
  }
  std::ostringstream out;
  std::vector<std::string> header;
  for (const auto& [key, value] : rows.front().items()) {
    if (csv_scalar(value)) header.push_back(key);
  }
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_cell(row[header[i]]);
    out << '\n';
  }
  return out.str();
}

void add_common(CLI::App* sub, Options& o, bool graph_flags) {
  sub->add_option("--n", o.n, "Ground-set size (vertex count for graph generators)");
  sub->add_option("--seed", o.seed, "Seed for every random choice");
  sub->add_option("--trials", o.trials, "Number of random trials");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
  if (graph_flags) {
    sub->add_option("--instance", o.instance, "Instance or graph JSON file");
    sub->add_flag("--nontrivial", o.nontrivial, "Restrict to sets other than the empty and full set");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact experiments on submodular minimization query complexity", "sfmlab"};
  app.require_subcommand(1, 1);

  auto* cs = app.add_subcommand("check-submodular", "Exhaustively check submodularity of instances");
  add_common(cs, o, true);
  cs->add_option("--construction", o.construction, "Instance family")
      ->check(CLI::IsMember({"permutation", "pair-family"}));

  auto* a2 = app.add_subcommand("adversary-2n", "Play a solver against the adaptive chain adversary");
  add_common(a2, o, false);
  a2->add_option("--solver", o.solver, "brute, 2n or truncated");

  auto* ap = app.add_subcommand("adversary-pairs", "Play a solver against the co-pair adversary");
  add_common(ap, o, false);
  ap->add_option("--solver", o.solver, "brute or truncated");

  auto* so = app.add_subcommand("solve", "Minimize an instance and compare with brute force");
  add_common(so, o, true);
  so->add_option("--solver", o.solver, "brute, reduction, queyranne or permutation");
  so->add_option("--construction", o.construction, "Random instance family")->check(CLI::IsMember({"permutation"}));

  auto* cd = app.add_subcommand("cutdim", "Cut dimension of a graph's minimizers");
  add_common(cd, o, true);
  cd->add_option("--construction", o.construction, "Graph construction")
      ->check(CLI::IsMember({"star-matching", "triangle"}));

  auto* pe = app.add_subcommand("perturb", "Perturbation witnesses for random query sets");
  add_common(pe, o, true);
  pe->add_option("--construction", o.construction, "Graph construction")
      ->check(CLI::IsMember({"star-matching", "triangle"}));

  auto* sb = app.add_subcommand("span-bound", "Base-set span bound on graphs");
  add_common(sb, o, true);
  sb->add_option("--mode", o.mode, "Cut mode of random graphs")
      ->check(CLI::IsMember({"undirected", "directed", "st"}));

  auto* lg = app.add_subcommand("learn-graph", "Reconstruct graphs from cut queries");
  add_common(lg, o, true);
  lg->add_option("--mode", o.mode, "Cut mode of random graphs")
      ->check(CLI::IsMember({"undirected", "directed", "st"}));

  auto* sk = app.add_subcommand("st-kernel", "Exhaustive orthogonality scan of the s-t kernel vector");
  sk->add_option("--k", o.k, "Number of non-terminal vertices")->required();
  sk->add_option("--u", o.u_star, "Non-terminal whose source edge is hidden");
  sk->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sk->add_option("--out", o.out, "Write the report to this file instead of stdout");

  auto* sc = app.add_subcommand("search-cutdim", "Random search for graphs with large cut dimension");
  add_common(sc, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "sfmlab: " << e.what() << '\n';
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Report report;
  try {
    if (name == "check-submodular") report = check_submodular_cmd(o);
    if (name == "adversary-2n") report = adversary_2n_cmd(o);
    if (name == "adversary-pairs") report = adversary_pairs_cmd(o);
    if (name == "solve") report = solve_cmd(o);
    if (name == "cutdim") report = cutdim_cmd(o);
    if (name == "perturb") report = perturb_cmd(o);
    if (name == "span-bound") report = span_bound_cmd(o);
    if (name == "learn-graph") report = learn_graph_cmd(o);
    if (name == "st-kernel") report = st_kernel_cmd(o);
    if (name == "search-cutdim") report = search_cutdim_cmd(o);
  } catch (const std::exception& e) {
    err << "sfmlab " << name << ": " << e.what() << '\n';
    return 2;
  }

  const std::string text = o.format == "csv" ? to_csv(report.body) : report.body.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "sfmlab: cannot write " << o.out << '\n';
      return 2;
    }
    file << text;
  }
  return report.pass ? 0 : 1;
}

}  // namespace sfmlab::cli
