#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sfmlab/cost_based.hpp"
#include "sfmlab/perturbation.hpp"
#include "sfmlab/permutation_family.hpp"
#include "sfmlab/sfm_solvers.hpp"
#include "sfmlab/weighted_graph.hpp"

namespace sfmlab {

// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; parsing also accepts JSON integers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json rationals_to_json(const std::vector<Rational>& values);

// Sorted element list, e.g. [1, 3].
Json subset_to_json(const Subset& s);

// {"kind": "permutation", "n", "sigma", "c"}
Json to_json(const PermutationInstance& p);
// {"kind": "cost_based", "n", "singletons", "cost": [[bitmask, "p/q"], ...]}
Json to_json(const CostBasedInstance& f);
// {"n_vertices", "mode", "s"?, "t"?, "directed"?, "edges": [[tail, head, "p/q"], ...]}
// "directed" is written only in s-t mode.
Json to_json(const WeightedGraph& g);
// {"z", "epsilon", "sign", "w_prime", "original_min", "changed_min", "moved_minimizer"}
Json to_json(const Witness& w);
// {"min_value", "argmin", "queries_used"}
Json to_json(const SolverResult& r);

// Each throws InvalidArgumentError with a one-line description of the first
// problem found.
PermutationInstance permutation_from_json(const Json& j);
CostBasedInstance cost_based_from_json(const Json& j);
WeightedGraph graph_from_json(const Json& j);

using Instance = std::variant<PermutationInstance, CostBasedInstance, WeightedGraph>;

// Dispatches on "kind", or on "n_vertices" for graphs.
Instance instance_from_json(const Json& j);
Instance load_instance(const std::string& path);

}  // namespace sfmlab
