#include "sfmlab/adversary_2n.hpp"

#include <memory>

#include "sfmlab/errors.hpp"

namespace sfmlab {

const char* to_string(QueryClass c) {
  switch (c) {
    case QueryClass::kImportant: return "important";
    case QueryClass::kUseless: return "useless";
    case QueryClass::kDecoy: return "decoy";
  }
  return "?";
}

const char* to_string(Verdict v) { return v == Verdict::kFooled ? "fooled" : "correct"; }

Adversary2n::Adversary2n(int n) : n_(n), partial_c_(static_cast<std::size_t>(n + 1)) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidArgumentError("adversary: n out of range");
}

Subset Adversary2n::defined_chain(int j) const {
  Subset::Mask bits = 0;
  for (int k = 0; k < j; ++k) bits |= Subset::Mask{1} << (partial_sigma_[k] - 1);
  return Subset(n_, bits);
}

AdversaryAnswer Adversary2n::answer(const Subset& s) {
  if (s.ground_size() != n_) throw SizeMismatchError("adversary: query over wrong ground set");
  const int i = defined_prefix();

  // Depth of s along the defined part of the chain.
  int depth = 0;
  while (depth < i && s.contains(partial_sigma_[depth])) ++depth;

  AdversaryAnswer out;
  if (s.size() == depth || s.is_full()) {
    // s = R_depth with depth ≤ i, or s = [n] = R_n for every σ.
    const int j = s.is_full() ? n_ : depth;
    partial_c_[j] = 0;
    important_.insert(s);
    out = {Rational(0), QueryClass::kImportant};
  } else if (depth < i) {
    ++useless_;
    out = {chain_formula(n_, s.size(), depth), QueryClass::kUseless};
  } else {
    // R_i ⊊ s ≠ [n]: fix σ(i + 1) to the smallest element outside s.
    int fresh = 1;
    while (s.contains(fresh)) ++fresh;
    partial_sigma_.push_back(fresh);
    ++decoys_;
    out = {chain_formula(n_, s.size(), i), QueryClass::kDecoy};
  }
  if (important_.size() > static_cast<std::size_t>(decoys_) + 2) decoy_bound_held_ = false;
  return out;
}

AdversaryOutcome Adversary2n::finalize(const Rational& guess) const {
  std::vector<int> sigma = partial_sigma_;
  std::vector<bool> used(static_cast<std::size_t>(n_ + 1), false);
  for (int e : sigma) used[e] = true;
  for (int e = 1; e <= n_; ++e) {
    if (!used[e]) sigma.push_back(e);
  }

  int fill = 0;
  if (important_.size() < static_cast<std::size_t>(n_ + 1)) {
    if (guess == 0) {
      fill = 1;
    } else if (guess == -1) {
      fill = 0;
    }
  }
  std::vector<int> c(static_cast<std::size_t>(n_ + 1));
  for (int j = 0; j <= n_; ++j) c[j] = partial_c_[j].value_or(fill);

  PermutationInstance instance(n_, std::move(sigma), std::move(c));
  Rational minimum = instance.minimum();
  const Verdict verdict = guess == minimum ? Verdict::kCorrect : Verdict::kFooled;
  return {std::move(instance), verdict, std::move(minimum)};
}

Game2nReport play_2n_game(int n, const MinValueSolver& solver) {
  auto adversary = std::make_shared<Adversary2n>(n);
  ValueOracle oracle(n, [adversary](const Subset& s) { return adversary->answer(s).value; });
  Rational guess = solver(oracle);
  AdversaryOutcome outcome = adversary->finalize(guess);
  const bool replays = oracle.transcript().replays_against(outcome.instance.as_function());
  return Game2nReport{n,
                      oracle.query_count(),
                      adversary->distinct_important(),
                      adversary->decoy_count(),
                      adversary->useless_count(),
                      std::move(guess),
                      outcome.verdict,
                      std::move(outcome.true_minimum),
                      std::move(outcome.instance),
                      replays,
                      adversary->decoy_bound_held(),
                      oracle.transcript()};
}

}  // namespace sfmlab
