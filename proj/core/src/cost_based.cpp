#include "sfmlab/cost_based.hpp"

#include <set>
#include <string>

#include "sfmlab/errors.hpp"

namespace sfmlab {

CostBasedInstance::CostBasedInstance(int n, std::vector<Rational> singletons, CostMap cost)
    : n_(n), singletons_(std::move(singletons)) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgumentError("cost-based instance: n out of range");
  if (singletons_.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("cost-based instance: need one singleton value per element");
  }
  for (auto& [mask, value] : cost) {
    if ((mask & ~Subset::full_mask(n)) != 0) {
      throw InvalidArgumentError("cost-based instance: cost key outside [n]");
    }
    if (value < 0) throw InvalidArgumentError("cost-based instance: negative cost");
    if (sgn(value) == 0) continue;
    if (std::popcount(mask) <= 1) {
      throw InvalidArgumentError("cost-based instance: cost must vanish on sets of size <= 1");
    }
    cost_.emplace(mask, std::move(value));
  }
}

Rational CostBasedInstance::cost_of(const Subset& t) const {
  auto it = cost_.find(t.bits());
  return it == cost_.end() ? Rational(0) : it->second;
}

Rational CostBasedInstance::evaluate(const Subset& s) const {
  if (s.ground_size() != n_) throw SizeMismatchError("cost-based instance: subset over wrong ground set");
  Rational value = 0;
  for (int i = 1; i <= n_; ++i) {
    if (s.contains(i)) value += singletons_[i - 1];
  }
  for (const auto& [mask, c] : cost_) {
    if ((mask & ~s.bits()) == 0) value -= c;
  }
  return value;
}

SetFunction CostBasedInstance::as_function() const {
  return [inst = *this](const Subset& s) { return inst.evaluate(s); };
}

namespace {

std::vector<Rational> unit_singletons(int n) { return std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)); }

CostBasedInstance base_instance(int n) {
  CostBasedInstance::CostMap cost;
  const Subset full = Subset::full(n);
  for (int i = 1; i <= n; ++i) cost[full.without(i).bits()] = n - 1;
  cost[full.bits()] = 2 * n;
  return CostBasedInstance(n, unit_singletons(n), std::move(cost));
}

CostBasedInstance variant_instance(int n, int i, int j) {
  CostBasedInstance::CostMap cost;
  const Subset full = Subset::full(n);
  cost[PairFamily::co_pair(n, i, j).bits()] = n - 1;
  for (int k = 1; k <= n; ++k) {
    if (k != i && k != j) cost[full.without(k).bits()] = n - 1;
  }
  cost[full.bits()] = 3 * n - 1;
  return CostBasedInstance(n, unit_singletons(n), std::move(cost));
}

int checked_pair_size(int n) {
  if (n < 4 || n > kMaxGroundSize) {
    throw InvalidArgumentError("pair family needs 4 <= n <= " + std::to_string(kMaxGroundSize) + ", got " +
                               std::to_string(n));
  }
  return n;
}

}  // namespace

PairFamily::PairFamily(int n) : n_(checked_pair_size(n)), base_(base_instance(n)) {
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) variants_.emplace(std::pair{i, j}, variant_instance(n, i, j));
  }
}

const CostBasedInstance& PairFamily::variant(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = variants_.find({i, j});
  if (it == variants_.end()) throw InvalidArgumentError("pair family: no variant for that pair");
  return it->second;
}

PairFamily make_pair_family(int n) { return PairFamily(n); }

std::optional<PairFoolingInstance> adversary_pairs(const QueryTranscript& transcript, const Rational& guess,
                                                   const PairFamily& family) {
  const int n = family.n();
  std::set<Subset::Mask> queried;
  for (const auto& e : transcript.entries()) {
    if (e.set.ground_size() != n) throw SizeMismatchError("adversary_pairs: query over wrong ground set");
    if (family.base().evaluate(e.set) != e.value) {
      throw InconsistencyError("adversary_pairs: answer for " + e.set.to_string() + " is not the base value");
    }
    queried.insert(e.set.bits());
  }

  const Rational base_min = 0;
  const Rational variant_min = -1;
  if (guess != base_min && guess != variant_min) {
    return PairFoolingInstance{std::nullopt, family.base(), base_min};
  }

  std::optional<std::pair<int, int>> open;
  for (int i = 1; i <= n && !open; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!queried.contains(PairFamily::co_pair(n, i, j).bits())) {
        open = std::pair{i, j};
        break;
      }
    }
  }

  if (guess == variant_min) {
    return PairFoolingInstance{std::nullopt, family.base(), base_min};
  }
  if (open) {
    return PairFoolingInstance{open, family.variant(open->first, open->second), variant_min};
  }
  return std::nullopt;
}

}  // namespace sfmlab
