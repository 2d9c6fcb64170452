#include "sfmlab/permutation_family.hpp"

#include <algorithm>
#include <string>

#include "sfmlab/errors.hpp"

namespace sfmlab {

PermutationInstance::PermutationInstance(int n, std::vector<int> sigma, std::vector<int> c)
    : n_(n), sigma_(std::move(sigma)), inverse_(static_cast<std::size_t>(std::max(n, 0)), 0), c_(std::move(c)) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgumentError("permutation instance: n out of range");
  if (sigma_.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("permutation instance: sigma must have n entries");
  }
  if (c_.size() != static_cast<std::size_t>(n + 1)) {
    throw InvalidArgumentError("permutation instance: c must have n + 1 entries");
  }
  for (int k = 0; k < n; ++k) {
    const int e = sigma_[k];
    if (e < 1 || e > n || inverse_[e - 1] != 0) {
      throw InvalidArgumentError("permutation instance: sigma is not a bijection on [n]");
    }
    inverse_[e - 1] = k + 1;
  }
  for (int ci : c_) {
    if (ci != 0 && ci != 1) throw InvalidArgumentError("permutation instance: c entries must be 0 or 1");
  }
}

PermutationInstance PermutationInstance::identity(int n, std::vector<int> c) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) sigma[k] = k + 1;
  return PermutationInstance(n, std::move(sigma), std::move(c));
}

Subset PermutationInstance::chain_set(int i) const {
  Subset::Mask bits = 0;
  for (int k = 0; k < i; ++k) bits |= Subset::Mask{1} << (sigma_[k] - 1);
  return Subset(n_, bits);
}

int PermutationInstance::chain_depth(const Subset& s) const {
  int j = 0;
  while (j < n_ && s.contains(sigma_[j])) ++j;
  return j;
}

Rational chain_formula(int n, int size, int depth) {
  return Rational(static_cast<long>(size - depth) * static_cast<long>(n + 2 - depth));
}

Rational PermutationInstance::evaluate(const Subset& s) const {
  if (s.ground_size() != n_) throw SizeMismatchError("permutation instance: subset over wrong ground set");
  const int j = chain_depth(s);
  if (s.size() == j) return Rational(-c_[j]);
  return chain_formula(n_, s.size(), j);
}

SetFunction PermutationInstance::as_function() const {
  return [inst = *this](const Subset& s) { return inst.evaluate(s); };
}

Rational PermutationInstance::minimum() const {
  return Rational(-*std::max_element(c_.begin(), c_.end()));
}

Subset PermutationInstance::minimizer() const {
  const auto it = std::max_element(c_.begin(), c_.end());
  return chain_set(static_cast<int>(it - c_.begin()));
}

PermutationSolve solve_permutation_family(ValueOracle& oracle) {
  const int n = oracle.ground_size();
  const std::size_t start = oracle.query_count();
  const Subset full = Subset::full(n);

  // position[e] = σ⁻¹(e); 0 while unknown.
  std::vector<int> position(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> taken(static_cast<std::size_t>(n + 1), false);
  for (int e = 2; e <= n; ++e) {
    const Rational value = oracle.evaluate(full.without(e));
    int pos = 0;
    if (value <= 0) {
      // [n] \ {e} is the chain set R_{n−1}.
      pos = n;
    } else {
      // Otherwise R_{k−1} ⊆ [n] \ {e} but R_k is not, with k = σ⁻¹(e) < n.
      for (int k = 1; k < n; ++k) {
        if (chain_formula(n, n - 1, k - 1) == value) {
          pos = k;
          break;
        }
      }
    }
    if (pos == 0 || taken[pos]) {
      throw InconsistencyError("answer " + to_string(value) + " for [n] \\ {" + std::to_string(e) +
                               "} fits no chain permutation");
    }
    taken[pos] = true;
    position[e] = pos;
  }
  for (int k = 1; k <= n; ++k) {
    if (!taken[k]) {
      position[1] = k;
      break;
    }
  }

  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) sigma[position[e] - 1] = e;

  Subset chain = Subset::empty(n);
  Rational best = 0;
  Subset best_set = chain;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) chain = chain.with(sigma[i - 1]);
    const Rational value = oracle.evaluate(chain);
    if (value != 0 && value != -1) {
      throw InconsistencyError("chain set " + chain.to_string() + " answered " + to_string(value));
    }
    if (i == 0 || value < best) {
      best = value;
      best_set = chain;
    }
  }
  return {best, best_set, sigma, oracle.query_count() - start};
}

}  // namespace sfmlab
