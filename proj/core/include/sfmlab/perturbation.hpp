#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfmlab/cut_dimension.hpp"

namespace sfmlab {

// Every w' with w'_i ∈ [(1 − ε0) w_i, (1 + ε0) w_i] keeps its minimizers
// inside M_f. ε0 = min(1, δ / (4 W)) where δ is the gap between the minimum
// and the next in-scope value and W = Σ w_i; with no gap, ε0 = 1/2.
struct PerturbationBox {
  WeightVector weights;
  Rational epsilon0;
  std::optional<Rational> gap;

  bool contains(const WeightVector& perturbed) const;
};

PerturbationBox compute_epsilon0(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial);

// A nearby weight-based function agreeing with f on a query set but with a
// different (nontrivial, if flagged) minimum. w' = w + sign · ε · z.
struct Witness {
  linalg::Vector z;
  Rational epsilon;
  int sign = 1;
  WeightVector perturbed;
  Rational original_min;
  Rational changed_min;
  // First minimizer with z · v^S ≠ 0; its value moves strictly down.
  Subset moved_minimizer;
};

// Precomputes minimizers, basis and box for one (h, w, flag) triple so that
// many query sets can be tested cheaply.
class PerturbationAnalysis {
 public:
  PerturbationAnalysis(HyperedgeSystem sys, WeightVector w, bool nontrivial);

  const HyperedgeSystem& system() const { return sys_; }
  const WeightVector& weights() const { return w_; }
  bool nontrivial() const { return nontrivial_; }
  const CutDimension& dimension() const { return dim_; }
  const MinimizerFamily& minimizers() const { return dim_.minimizers; }
  const PerturbationBox& box() const { return box_; }

  // The cut-dimension basis: querying these pins every minimizer's value.
  const std::vector<Subset>& determining_basis() const { return dim_.basis; }

  // Given g(S_k) for the basis sets (in order), the value g(S) forced on a
  // minimizer S through v^S = Σ c_k v^{S_k}. Throws if S is not a minimizer.
  Rational predict_minimizer_value(const Subset& minimizer, const std::vector<Rational>& basis_values) const;
  // The coefficients c_k themselves.
  linalg::Vector basis_coefficients(const Subset& minimizer) const;

  // nullopt iff no nonzero z lies in both the query nullspace X and the
  // minimizer span Y.
  std::optional<Witness> find_witness(const std::vector<Subset>& queries) const;

  // Empty when the witness satisfies every invariant; otherwise one message
  // per failed check. Re-derives everything by direct evaluation.
  std::vector<std::string> check_witness(const std::vector<Subset>& queries, const Witness& witness) const;

  // d × d matrix of v^{S_i} · v^{S_j} over the basis.
  linalg::Matrix gram_matrix() const;
  // dim of the nullspace of the query vectors, i.e. dim X.
  std::size_t query_nullspace_dimension(const std::vector<Subset>& queries) const;

 private:
  linalg::Vector indicator(const Subset& s) const;

  HyperedgeSystem sys_;
  WeightVector w_;
  bool nontrivial_;
  CutDimension dim_;
  PerturbationBox box_;
  std::vector<linalg::Vector> basis_vectors_;
  linalg::IncrementalBasis span_;
};

std::vector<Subset> determining_basis(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial);

std::optional<Witness> find_witness(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial,
                                    const std::vector<Subset>& queries);

struct EquivalenceReport {
  bool pass = true;
  int n = 0;
  int d = 0;
  int trials = 0;
  int witnesses_found = 0;
  bool basis_blocks_witness = false;
  bool gram_full_rank = false;
  std::vector<std::string> failures;
  // A witness from the first trial, when one exists (for reporting).
  std::optional<Witness> sample;
  std::vector<Subset> sample_queries;
};

inline constexpr int kEquivalenceLimit = 12;

// Random (d − 1)-query sets (trial t drawn with seed + t) must each admit a
// valid witness, and the determining basis must admit none.
EquivalenceReport verify_equivalence(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial, int trials,
                                     std::uint64_t seed);

}  // namespace sfmlab
