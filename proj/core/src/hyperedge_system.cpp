#include "sfmlab/hyperedge_system.hpp"

#include <algorithm>
#include <cstdint>

#include "sfmlab/errors.hpp"

namespace sfmlab {

HyperedgeSystem HyperedgeSystem::from_rule(int n, int m, Rule rule) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgumentError("hyperedge system: n out of range");
  if (m < 0) throw InvalidArgumentError("hyperedge system: negative hyperedge count");
  return HyperedgeSystem(n, m, std::move(rule), nullptr);
}

HyperedgeSystem HyperedgeSystem::from_table(int n, int m, std::vector<std::vector<int>> table) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgumentError("hyperedge system: n out of range");
  if (table.size() != (std::size_t{1} << n)) {
    throw InvalidArgumentError("hyperedge system: table needs 2^n entries");
  }
  for (auto& entry : table) {
    std::sort(entry.begin(), entry.end());
    if (std::adjacent_find(entry.begin(), entry.end()) != entry.end()) {
      throw InvalidArgumentError("hyperedge system: repeated hyperedge in an active set");
    }
    for (int idx : entry) {
      if (idx < 0 || idx >= m) throw InvalidArgumentError("hyperedge system: index outside [0, m)");
    }
  }
  return HyperedgeSystem(n, m, nullptr, std::make_shared<const std::vector<std::vector<int>>>(std::move(table)));
}

std::vector<int> HyperedgeSystem::active(const Subset& s) const {
  if (s.ground_size() != n_) throw SizeMismatchError("hyperedge system: subset over wrong ground set");
  if (table_) return (*table_)[s.bits()];
  std::vector<int> out;
  rule_(s, out);
  return out;
}

HyperedgeSystem HyperedgeSystem::materialized() const {
  require_enumerable(n_, 16, "HyperedgeSystem::materialized");
  std::vector<std::vector<int>> table;
  table.reserve(std::size_t{1} << n_);
  for_each_subset(n_, [&](const Subset& s) { table.push_back(active(s)); });
  return from_table(n_, m_, std::move(table));
}

HyperedgeSystem HyperedgeSystem::relabeled(const std::vector<int>& permutation) const {
  if (permutation.size() != static_cast<std::size_t>(m_)) {
    throw SizeMismatchError("relabel permutation must have m entries");
  }
  HyperedgeSystem base = *this;
  return from_rule(n_, m_, [base, permutation](const Subset& s, std::vector<int>& out) {
    for (int idx : base.active(s)) out.push_back(permutation[idx]);
    std::sort(out.begin(), out.end());
  });
}

WeightVector::WeightVector(std::vector<Rational> w) : w_(std::move(w)) {
  for (const auto& x : w_) {
    if (x < 0) throw InvalidArgumentError("weights must be non-negative");
  }
}

Rational WeightVector::total() const {
  Rational sum = 0;
  for (const auto& x : w_) sum += x;
  return sum;
}

Rational eval_weight_based(const HyperedgeSystem& sys, const WeightVector& w, const Subset& s) {
  if (w.size() != static_cast<std::size_t>(sys.m())) {
    throw SizeMismatchError("weight vector length " + std::to_string(w.size()) + " does not match m = " +
                            std::to_string(sys.m()));
  }
  Rational total = 0;
  for (int idx : sys.active(s)) total += w[idx];
  return total;
}

SetFunction weight_based_function(const HyperedgeSystem& sys, const WeightVector& w) {
  if (w.size() != static_cast<std::size_t>(sys.m())) {
    throw SizeMismatchError("weight vector length does not match hyperedge count");
  }
  return [sys, w](const Subset& s) { return eval_weight_based(sys, w, s); };
}

std::optional<WeightConditionViolation> check_weight_based_condition(const HyperedgeSystem& sys) {
  const int n = sys.n();
  require_enumerable(n, kWeightConditionLimit, "check_weight_based_condition");
  const std::size_t words = (static_cast<std::size_t>(sys.m()) + 63) / 64;
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint64_t> bits(count * words, 0);
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (int idx : sys.active(Subset(n, static_cast<Subset::Mask>(mask)))) {
      bits[mask * words + idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = s + 1; t < count; ++t) {
      const std::size_t lo = s & t;
      const std::size_t hi = s | t;
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t a = bits[lo * words + w];
        const std::uint64_t b = bits[hi * words + w];
        const std::uint64_t c = bits[s * words + w];
        const std::uint64_t d = bits[t * words + w];
        // Per hyperedge: [a] + [b] ≤ [c] + [d].
        const std::uint64_t bad = ((a & b) & ~(c & d)) | ((a | b) & ~(c | d));
        if (bad != 0) {
          return WeightConditionViolation{Subset(n, static_cast<Subset::Mask>(s)),
                                          Subset(n, static_cast<Subset::Mask>(t)),
                                          static_cast<int>(w * 64 + std::countr_zero(bad))};
        }
      }
    }
  }
  return std::nullopt;
}

std::pair<HyperedgeSystem, WeightVector> cut_system_from_graph(const WeightedGraph& g) {
  std::vector<Rational> weights;
  weights.reserve(g.edges().size());
  for (const auto& e : g.edges()) weights.push_back(e.weight);
  auto sys = HyperedgeSystem::from_rule(g.ground_size(), static_cast<int>(g.edges().size()),
                                        [g](const Subset& s, std::vector<int>& out) {
                                          const auto& edges = g.edges();
                                          for (std::size_t k = 0; k < edges.size(); ++k) {
                                            if (g.edge_active(s, edges[k])) out.push_back(static_cast<int>(k));
                                          }
                                        });
  return {std::move(sys), WeightVector(std::move(weights))};
}

}  // namespace sfmlab
