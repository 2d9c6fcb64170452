#include "sfmlab/set_function_checks.hpp"

#include <climits>
#include <cstdint>

#include "sfmlab/errors.hpp"

namespace sfmlab {

std::vector<Rational> tabulate(const SetFunction& f, int n) {
  std::vector<Rational> table;
  table.reserve(std::size_t{1} << n);
  for_each_subset(n, [&](const Subset& s) { table.push_back(f(s)); });
  return table;
}

namespace {

using Mask = Subset::Mask;

// Integer tables dominate in practice (hard instances, unit-weight cuts), and
// int64 arithmetic is exact as long as every |value| < 2^61.
std::optional<std::vector<std::int64_t>> as_small_integers(const std::vector<Rational>& table) {
  std::vector<std::int64_t> out;
  out.reserve(table.size());
  const mpz_class bound = mpz_class(1) << 61;
  for (const auto& v : table) {
    if (v.get_den() != 1) return std::nullopt;
    const mpz_class& num = v.get_num();
    if (num >= bound || num <= -bound) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(num.get_si()));
  }
  return out;
}

template <typename Value>
std::optional<std::pair<Mask, Mask>> scan_pairs(const std::vector<Value>& table, Mask count) {
  for (Mask x = 0; x < count; ++x) {
    for (Mask y = x + 1; y < count; ++y) {
      // Comparable pairs satisfy the inequality with equality.
      if ((x & y) == x || (x & y) == y) continue;
      if (table[x | y] + table[x & y] > table[x] + table[y]) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SubmodularityViolation> check_submodular(const SetFunction& f, int n) {
  require_enumerable(n, kSubmodularCheckLimit, "check_submodular");
  const auto table = tabulate(f, n);
  const Mask count = Mask{1} << n;
  // Violations are symmetric in (X, Y), so the first pair with X < Y is also
  // the first pair overall.
  std::optional<std::pair<Mask, Mask>> hit;
  if (auto ints = as_small_integers(table)) {
    hit = scan_pairs(*ints, count);
  } else {
    hit = scan_pairs(table, count);
  }
  if (!hit) return std::nullopt;
  return SubmodularityViolation{Subset(n, hit->first), Subset(n, hit->second)};
}

std::optional<DiminishingReturnsViolation> check_diminishing_returns(const SetFunction& f, int n) {
  require_enumerable(n, 12, "check_diminishing_returns");
  const auto table = tabulate(f, n);
  const Mask count = Mask{1} << n;
  for (Mask s = 0; s < count; ++s) {
    for (int i = 1; i <= n; ++i) {
      const Mask bit = Mask{1} << (i - 1);
      if (s & bit) continue;
      const Rational gain_large = table[s | bit] - table[s];
      // Enumerate T ⊆ S in increasing order.
      Mask t = 0;
      while (true) {
        if (gain_large > table[t | bit] - table[t]) {
          return DiminishingReturnsViolation{Subset(n, t), Subset(n, s), i};
        }
        if (t == s) break;
        t = (t - s) & s;
      }
    }
  }
  return std::nullopt;
}

std::optional<Subset> check_symmetric(const SetFunction& f, int n) {
  require_enumerable(n, kSymmetryCheckLimit, "check_symmetric");
  const auto table = tabulate(f, n);
  const Mask full = Subset::full_mask(n);
  const Mask count = Mask{1} << n;
  for (Mask s = 0; s < count; ++s) {
    if (table[s] != table[full & ~s]) return Subset(n, s);
  }
  return std::nullopt;
}

}  // namespace sfmlab
