#include "sfmlab/sfm_solvers.hpp"

#include <vector>

#include "sfmlab/errors.hpp"
#include "sfmlab/set_function_checks.hpp"

namespace sfmlab {

SolverResult brute_force_sfm(ValueOracle& oracle, bool nontrivial) {
  const int n = oracle.ground_size();
  require_enumerable(n, kMaxGroundSize, "brute_force_sfm");
  if (nontrivial && n < 2) throw InvalidArgumentError("nontrivial minimization needs n >= 2");
  const std::size_t start = oracle.query_count();
  std::optional<SolverResult> best;
  for_each_subset(n, [&](const Subset& s) {
    if (nontrivial && !s.is_nontrivial()) return;
    Rational value = oracle.evaluate(s);
    if (!best || value < best->min_value) best = SolverResult{std::move(value), s, 0};
  });
  best->queries_used = oracle.query_count() - start;
  return *best;
}

namespace {

// Exhaustive scan over {S : must ⊆ S, S ∩ forbid = ∅}.
void scan_restricted(ValueOracle& oracle, Subset::Mask must, Subset::Mask forbid, std::optional<SolverResult>& best) {
  const int n = oracle.ground_size();
  const Subset::Mask free = Subset::full_mask(n) & ~must & ~forbid;
  Subset::Mask sub = 0;
  while (true) {
    const Subset s(n, must | sub);
    Rational value = oracle.evaluate(s);
    if (!best || value < best->min_value) best = SolverResult{std::move(value), s, 0};
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

}  // namespace

SolverResult nontrivial_via_reduction(ValueOracle& oracle) {
  const int n = oracle.ground_size();
  if (n < 2) throw InvalidArgumentError("nontrivial minimization needs n >= 2");
  require_enumerable(n, kMaxGroundSize, "nontrivial_via_reduction");
  const std::size_t start = oracle.query_count();
  auto bit = [](int element) { return Subset::Mask{1} << (element - 1); };
  std::optional<SolverResult> best;
  for (int i = 1; i <= n; ++i) {
    const int next = i == n ? 1 : i + 1;
    const int prev = i == 1 ? n : i - 1;
    scan_restricted(oracle, bit(i), bit(next), best);
    scan_restricted(oracle, bit(i), bit(prev), best);
  }
  best->queries_used = oracle.query_count() - start;
  return *best;
}

SolverResult queyranne_minimize(ValueOracle& oracle, bool verify_symmetry) {
  const int n = oracle.ground_size();
  if (n < 2) throw InvalidArgumentError("nontrivial minimization needs n >= 2");
  if (verify_symmetry) {
    require_enumerable(n, 12, "queyranne_minimize symmetry verification");
    if (auto bad = check_symmetric(oracle.underlying(), n)) {
      throw NotSymmetricError("f(S) != f(complement) at S = " + bad->to_string());
    }
  }
  const std::size_t start = oracle.query_count();

  // Each group is the set of original elements merged into one super-element.
  std::vector<Subset::Mask> groups;
  for (int e = 1; e <= n; ++e) groups.push_back(Subset::Mask{1} << (e - 1));

  std::optional<SolverResult> best;
  while (groups.size() > 1) {
    const std::size_t k = groups.size();
    std::vector<Rational> alone(k);
    for (std::size_t g = 0; g < k; ++g) alone[g] = oracle.evaluate(Subset(n, groups[g]));

    // Maximum-adjacency style ordering: start from group 0, repeatedly append
    // the group minimizing f(W ∪ u) − f(u).
    std::vector<bool> placed(k, false);
    std::vector<std::size_t> order{0};
    placed[0] = true;
    Subset::Mask prefix = groups[0];
    for (std::size_t step = 1; step < k; ++step) {
      std::optional<std::size_t> pick;
      Rational pick_key;
      for (std::size_t u = 0; u < k; ++u) {
        if (placed[u]) continue;
        Rational key = oracle.evaluate(Subset(n, prefix | groups[u])) - alone[u];
        if (!pick || key < pick_key) {
          pick = u;
          pick_key = std::move(key);
        }
      }
      placed[*pick] = true;
      order.push_back(*pick);
      prefix |= groups[*pick];
    }

    // (t, u) = last two in the order; {u} is a minimal cut separating them.
    const std::size_t t = order[k - 2];
    const std::size_t u = order[k - 1];
    if (!best || alone[u] < best->min_value) best = SolverResult{alone[u], Subset(n, groups[u]), 0};
    groups[t] |= groups[u];
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(u));
  }
  best->queries_used = oracle.query_count() - start;
  return *best;
}

}  // namespace sfmlab
