#pragma once

#include <optional>

#include "sfmlab/value_oracle.hpp"

namespace sfmlab {

inline constexpr int kSubmodularCheckLimit = 16;
inline constexpr int kDiminishingReturnsCheckLimit = 16;
inline constexpr int kSymmetryCheckLimit = 20;

// X, Y with f(X ∪ Y) + f(X ∩ Y) > f(X) + f(Y).
struct SubmodularityViolation {
  Subset x;
  Subset y;
};

// nullopt means the function is submodular. Otherwise returns the first
// violating pair in (X, Y) bitmask order. Evaluates f exactly 2^n times.
std::optional<SubmodularityViolation> check_submodular(const SetFunction& f, int n);

// Diminishing-returns form: f(S ∪ {i}) − f(S) ≤ f(T ∪ {i}) − f(T) for T ⊆ S, i ∉ S.
struct DiminishingReturnsViolation {
  Subset smaller;  // T
  Subset larger;   // S
  int element;     // i
};
std::optional<DiminishingReturnsViolation> check_diminishing_returns(const SetFunction& f, int n);

// nullopt iff f(S) = f([n] \ S) for every S; otherwise the smallest offending S.
std::optional<Subset> check_symmetric(const SetFunction& f, int n);

// All 2^n values, indexed by bitmask.
std::vector<Rational> tabulate(const SetFunction& f, int n);

}  // namespace sfmlab
