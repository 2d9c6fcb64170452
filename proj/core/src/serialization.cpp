#include "sfmlab/serialization.hpp"

#include <fstream>

#include "sfmlab/errors.hpp"

namespace sfmlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgumentError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidArgumentError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidArgumentError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InvalidArgumentError(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::vector<int> int_array(const Json& j, const char* key) {
  std::vector<int> out;
  for (const auto& v : array_field(j, key)) {
    if (!v.is_number_integer()) throw InvalidArgumentError(std::string("field \"") + key + "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<long>());
  throw InvalidArgumentError("expected a rational as a \"p/q\" string");
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json subset_to_json(const Subset& s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

Json to_json(const PermutationInstance& p) {
  Json j;
  j["kind"] = "permutation";
  j["n"] = p.n();
  j["sigma"] = p.sigma();
  j["c"] = p.c();
  return j;
}

Json to_json(const CostBasedInstance& f) {
  Json j;
  j["kind"] = "cost_based";
  j["n"] = f.n();
  j["singletons"] = rationals_to_json(f.singletons());
  Json cost = Json::array();
  for (const auto& [mask, c] : f.cost()) cost.push_back(Json::array({mask, to_string(c)}));
  j["cost"] = std::move(cost);
  return j;
}

Json to_json(const WeightedGraph& g) {
  Json j;
  j["n_vertices"] = g.num_vertices();
  j["mode"] = to_string(g.mode());
  if (g.mode() == CutMode::kSt) {
    j["s"] = *g.source();
    j["t"] = *g.sink();
    j["directed"] = g.st_directed();
  }
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.tail, e.head, to_string(e.weight)}));
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["z"] = rationals_to_json(w.z);
  j["epsilon"] = to_string(w.epsilon);
  j["sign"] = w.sign;
  j["w_prime"] = rationals_to_json(w.perturbed.values());
  j["original_min"] = to_string(w.original_min);
  j["changed_min"] = to_string(w.changed_min);
  j["moved_minimizer"] = subset_to_json(w.moved_minimizer);
  return j;
}

Json to_json(const SolverResult& r) {
  Json j;
  j["min_value"] = to_string(r.min_value);
  j["argmin"] = subset_to_json(r.argmin);
  j["queries_used"] = r.queries_used;
  return j;
}

PermutationInstance permutation_from_json(const Json& j) {
  return PermutationInstance(int_field(j, "n"), int_array(j, "sigma"), int_array(j, "c"));
}

CostBasedInstance cost_based_from_json(const Json& j) {
  const int n = int_field(j, "n");
  std::vector<Rational> singletons;
  for (const auto& v : array_field(j, "singletons")) singletons.push_back(rational_from_json(v));
  CostBasedInstance::CostMap cost;
  for (const auto& entry : array_field(j, "cost")) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned()) {
      throw InvalidArgumentError("cost entries must be [bitmask, \"p/q\"]");
    }
    auto mask = entry[0].get<Subset::Mask>();
    if (!cost.emplace(mask, rational_from_json(entry[1])).second) {
      throw InvalidArgumentError("duplicate cost entry for bitmask " + std::to_string(mask));
    }
  }
  return CostBasedInstance(n, std::move(singletons), std::move(cost));
}

WeightedGraph graph_from_json(const Json& j) {
  const int vertices = int_field(j, "n_vertices");
  const Json& mode_field = field(j, "mode");
  if (!mode_field.is_string()) throw InvalidArgumentError("field \"mode\" must be a string");
  const CutMode mode = parse_cut_mode(mode_field.get<std::string>());
  std::vector<Edge> edges;
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InvalidArgumentError("edges must be [tail, head, \"p/q\"]");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>(), rational_from_json(e[2])});
  }
  if (mode != CutMode::kSt) return WeightedGraph(vertices, mode, std::move(edges));
  bool directed = false;
  if (auto it = j.find("directed"); it != j.end()) {
    if (!it->is_boolean()) throw InvalidArgumentError("field \"directed\" must be a boolean");
    directed = it->get<bool>();
  }
  return WeightedGraph(vertices, mode, std::move(edges), int_field(j, "s"), int_field(j, "t"), directed);
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgumentError("instance must be a JSON object");
  if (j.contains("n_vertices")) return graph_from_json(j);
  const Json& kind = field(j, "kind");
  if (kind == "permutation") return permutation_from_json(j);
  if (kind == "cost_based") return cost_based_from_json(j);
  throw InvalidArgumentError("unknown instance kind " + kind.dump());
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgumentError(path + ": " + e.what());
  }
  return instance_from_json(j);
}

}  // namespace sfmlab
