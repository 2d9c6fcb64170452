#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "sfmlab/permutation_family.hpp"
#include "sfmlab/value_oracle.hpp"

namespace sfmlab {

enum class QueryClass { kImportant, kUseless, kDecoy };

const char* to_string(QueryClass c);

struct AdversaryAnswer {
  Rational value;
  QueryClass kind;
};

enum class Verdict { kFooled, kCorrect };

const char* to_string(Verdict v);

struct AdversaryOutcome {
  PermutationInstance instance;
  Verdict verdict;
  Rational true_minimum;
};

// Adaptive adversary for the chain family. It commits to σ one position at a
// time (only when a query would otherwise pin j(S)) and to c_j only when R_j is
// queried, so that any algorithm that stops early can be shown a consistent
// instance with a different minimum.
//
// Decoy queries fix σ(i + 1) to the smallest element outside the query.
class Adversary2n {
 public:
  explicit Adversary2n(int n);

  AdversaryAnswer answer(const Subset& s);

  // Completes σ and c against the guess and judges it. Undefined σ positions
  // are filled with unused elements in increasing order.
  AdversaryOutcome finalize(const Rational& guess) const;

  int n() const { return n_; }
  // Number of defined σ outputs (the "i" of the construction).
  int defined_prefix() const { return static_cast<int>(partial_sigma_.size()); }
  const std::vector<int>& partial_sigma() const { return partial_sigma_; }
  // c_j for j = 0..n, or nullopt while undefined.
  const std::vector<std::optional<int>>& partial_c() const { return partial_c_; }
  std::size_t distinct_important() const { return important_.size(); }
  int decoy_count() const { return decoys_; }
  int useless_count() const { return useless_; }
  // distinct_important ≤ decoy_count + 2 held after every answer so far.
  bool decoy_bound_held() const { return decoy_bound_held_; }

 private:
  Subset defined_chain(int j) const;

  int n_;
  std::vector<int> partial_sigma_;
  std::vector<std::optional<int>> partial_c_;
  std::set<Subset> important_;
  int decoys_ = 0;
  int useless_ = 0;
  bool decoy_bound_held_ = true;
};

// Everything observed in one play of a solver against Adversary2n.
struct Game2nReport {
  int n;
  std::size_t queries_used;
  std::size_t distinct_important;
  int decoy_count;
  int useless_count;
  Rational guess;
  Verdict verdict;
  Rational true_minimum;
  PermutationInstance completed;
  bool transcript_replays;
  bool decoy_bound_held;
  QueryTranscript transcript;
};

// A solver sees only the oracle and commits to a minimum value.
using MinValueSolver = std::function<Rational(ValueOracle&)>;

Game2nReport play_2n_game(int n, const MinValueSolver& solver);

}  // namespace sfmlab
