#include "sfmlab/perturbation.hpp"

#include <algorithm>
#include <random>

#include "sfmlab/errors.hpp"

namespace sfmlab {

bool PerturbationBox::contains(const WeightVector& perturbed) const {
  if (perturbed.size() != weights.size()) return false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Rational lo = (1 - epsilon0) * weights[i];
    const Rational hi = (1 + epsilon0) * weights[i];
    if (perturbed[i] < lo || perturbed[i] > hi || perturbed[i] < 0) return false;
  }
  return true;
}

namespace {

PerturbationBox box_from_family(const WeightVector& w, const MinimizerFamily& family) {
  const Rational total = w.total();
  if (sgn(total) == 0) throw DegenerateFunctionError("all weights are zero; no perturbation box exists");
  PerturbationBox box{w, Rational(1, 2), std::nullopt};
  if (family.next_value) {
    Rational gap = *family.next_value - family.min_value;
    Rational eps = gap / (4 * total);
    box.epsilon0 = eps < 1 ? eps : Rational(1);
    box.gap = std::move(gap);
  }
  return box;
}

// Scales z to a primitive integer vector whose first nonzero entry is positive.
void normalize_direction(linalg::Vector& z) {
  mpz_class lcm = 1;
  for (const auto& x : z) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  mpz_class gcd = 0;
  std::vector<mpz_class> ints;
  ints.reserve(z.size());
  for (const auto& x : z) {
    mpz_class v = x.get_num() * (lcm / x.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (gcd == 0) return;
  int lead = 0;
  for (const auto& v : ints) {
    if (sgn(v) != 0) {
      lead = sgn(v);
      break;
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    mpz_class q = ints[i] / gcd;
    z[i] = Rational(lead < 0 ? mpz_class(-q) : q);
  }
}

}  // namespace

PerturbationBox compute_epsilon0(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial) {
  return box_from_family(w, enumerate_minimizers(sys, w, nontrivial));
}

PerturbationAnalysis::PerturbationAnalysis(HyperedgeSystem sys, WeightVector w, bool nontrivial)
    : sys_(std::move(sys)),
      w_(std::move(w)),
      nontrivial_(nontrivial),
      dim_(cut_dimension(sys_, w_, nontrivial)),
      box_(box_from_family(w_, dim_.minimizers)),
      span_(static_cast<std::size_t>(sys_.m())) {
  for (const auto& s : dim_.basis) {
    basis_vectors_.push_back(indicator(s));
    span_.try_add(basis_vectors_.back());
  }
}

linalg::Vector PerturbationAnalysis::indicator(const Subset& s) const {
  if (s.ground_size() != sys_.n()) throw SizeMismatchError("query over wrong ground set");
  return indicator_vector(sys_, w_, s).as_rational();
}

linalg::Vector PerturbationAnalysis::basis_coefficients(const Subset& minimizer) const {
  if (!minimizers().contains(minimizer)) {
    throw InvalidArgumentError(minimizer.to_string() + " is not a minimizer");
  }
  auto c = span_.express(indicator(minimizer));
  if (!c) throw InconsistencyError("minimizer vector outside the basis span");
  return *c;
}

Rational PerturbationAnalysis::predict_minimizer_value(const Subset& minimizer,
                                                       const std::vector<Rational>& basis_values) const {
  if (basis_values.size() != dim_.basis.size()) throw SizeMismatchError("need one value per basis set");
  const auto c = basis_coefficients(minimizer);
  return linalg::dot(c, basis_values);
}

linalg::Matrix PerturbationAnalysis::gram_matrix() const {
  linalg::Matrix gram;
  for (const auto& a : basis_vectors_) {
    linalg::Vector row;
    for (const auto& b : basis_vectors_) row.push_back(linalg::dot(a, b));
    gram.push_back(std::move(row));
  }
  return gram;
}

std::size_t PerturbationAnalysis::query_nullspace_dimension(const std::vector<Subset>& queries) const {
  linalg::Matrix rows;
  for (const auto& q : queries) rows.push_back(indicator(q));
  return static_cast<std::size_t>(sys_.m()) - linalg::rank(rows);
}

std::optional<Witness> PerturbationAnalysis::find_witness(const std::vector<Subset>& queries) const {
  const std::size_t d = basis_vectors_.size();
  std::vector<linalg::Vector> query_vectors;
  for (const auto& q : queries) query_vectors.push_back(indicator(q));
  if (d == 0) return std::nullopt;

  // z = Σ β_k B_k lies in X iff every query vector annihilates it.
  linalg::Matrix system;
  for (const auto& qv : query_vectors) {
    linalg::Vector row;
    for (const auto& b : basis_vectors_) row.push_back(linalg::dot(qv, b));
    system.push_back(std::move(row));
  }
  const auto kernel = linalg::nullspace(system, d);
  if (kernel.empty()) return std::nullopt;

  const std::size_t m = static_cast<std::size_t>(sys_.m());
  linalg::Vector z(m, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    if (sgn(kernel.front()[k]) == 0) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(basis_vectors_[k][i]) != 0) z[i] += kernel.front()[k] * basis_vectors_[k][i];
    }
  }
  normalize_direction(z);

  const auto& family = minimizers();
  std::optional<Subset> moved;
  Rational moved_dot = 0;
  for (const auto& s : family.sets) {
    Rational p = linalg::dot(z, indicator(s));
    if (sgn(p) != 0) {
      moved = s;
      moved_dot = std::move(p);
      break;
    }
  }
  if (!moved) return std::nullopt;

  Rational min_weight = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (w_.positive(i) && (sgn(min_weight) == 0 || w_[i] < min_weight)) min_weight = w_[i];
  }
  Rational max_abs = 0;
  Rational sum_abs = 0;
  for (const auto& zi : z) {
    Rational a = abs(zi);
    if (a > max_abs) max_abs = a;
    sum_abs += a;
  }
  const Rational gap = box_.gap.value_or(Rational(1, 2));
  Rational box_limit = box_.epsilon0 * min_weight / max_abs;
  Rational gap_limit = gap / (2 * sum_abs);
  Rational epsilon = box_limit < gap_limit ? box_limit : gap_limit;

  const int sign = sgn(moved_dot) > 0 ? -1 : 1;
  std::vector<Rational> perturbed(m);
  for (std::size_t i = 0; i < m; ++i) perturbed[i] = w_[i] + sign * epsilon * z[i];

  // Minimizers of g stay inside M_f, so the new minimum is attained there.
  Rational changed_min = 0;
  bool first = true;
  for (const auto& s : family.sets) {
    Rational value = family.min_value + sign * epsilon * linalg::dot(z, indicator(s));
    if (first || value < changed_min) changed_min = std::move(value);
    first = false;
  }

  return Witness{std::move(z),          std::move(epsilon),       sign, WeightVector(std::move(perturbed)),
                 family.min_value,      std::move(changed_min),   *moved};
}

std::vector<std::string> PerturbationAnalysis::check_witness(const std::vector<Subset>& queries,
                                                             const Witness& witness) const {
  std::vector<std::string> failures;
  const std::size_t m = static_cast<std::size_t>(sys_.m());
  if (witness.z.size() != m || witness.perturbed.size() != m) {
    failures.push_back("witness vectors have the wrong length");
    return failures;
  }
  if (linalg::is_zero(witness.z)) failures.push_back("z is zero");
  for (std::size_t i = 0; i < m; ++i) {
    if (!w_.positive(i) && sgn(witness.z[i]) != 0) {
      failures.push_back("z nonzero on zero-weight hyperedge " + std::to_string(i));
    }
    if (witness.perturbed[i] != w_[i] + witness.sign * witness.epsilon * witness.z[i]) {
      failures.push_back("w' != w + sign * epsilon * z at " + std::to_string(i));
    }
  }
  if (sgn(witness.epsilon) <= 0) failures.push_back("epsilon is not positive");
  if (!box_.contains(witness.perturbed)) failures.push_back("w' leaves the perturbation box");

  for (const auto& q : queries) {
    if (eval_weight_based(sys_, witness.perturbed, q) != eval_weight_based(sys_, w_, q)) {
      failures.push_back("perturbed function disagrees with f on query " + q.to_string());
    }
  }

  const MinimizerFamily moved = enumerate_minimizers(sys_, witness.perturbed, nontrivial_);
  if (moved.min_value == minimizers().min_value) failures.push_back("minimum value did not change");
  if (moved.min_value != witness.changed_min) failures.push_back("reported changed_min is wrong");
  for (const auto& s : moved.sets) {
    if (!minimizers().contains(s)) failures.push_back("new minimizer " + s.to_string() + " outside M_f");
  }
  return failures;
}

std::vector<Subset> determining_basis(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial) {
  return cut_dimension(sys, w, nontrivial).basis;
}

std::optional<Witness> find_witness(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial,
                                    const std::vector<Subset>& queries) {
  return PerturbationAnalysis(sys, w, nontrivial).find_witness(queries);
}

EquivalenceReport verify_equivalence(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial, int trials,
                                     std::uint64_t seed) {
  require_enumerable(sys.n(), kEquivalenceLimit, "verify_equivalence");
  const PerturbationAnalysis analysis(sys, w, nontrivial);
  EquivalenceReport report;
  report.n = sys.n();
  report.d = analysis.dimension().d;
  report.trials = trials;

  const auto gram = analysis.gram_matrix();
  report.gram_full_rank = linalg::rank(gram) == static_cast<std::size_t>(report.d);
  if (!report.gram_full_rank) report.failures.push_back("Gram matrix of the basis is singular");

  const int query_count = report.d - 1;
  const Subset::Mask subsets = Subset::Mask{1} << sys.n();
  for (int trial = 0; trial < trials && query_count >= 0; ++trial) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
    std::uniform_int_distribution<Subset::Mask> pick(0, subsets - 1);
    std::vector<Subset> queries;
    for (int q = 0; q < query_count; ++q) queries.emplace_back(sys.n(), pick(rng));

    auto witness = analysis.find_witness(queries);
    if (!witness) {
      report.failures.push_back("trial " + std::to_string(trial) + ": no witness for d - 1 queries");
      continue;
    }
    auto problems = analysis.check_witness(queries, *witness);
    if (!problems.empty()) {
      report.failures.push_back("trial " + std::to_string(trial) + ": " + problems.front());
      continue;
    }
    ++report.witnesses_found;
    if (!report.sample) {
      report.sample = std::move(witness);
      report.sample_queries = queries;
    }
  }

  report.basis_blocks_witness = !analysis.find_witness(analysis.determining_basis()).has_value();
  if (!report.basis_blocks_witness) report.failures.push_back("determining basis still admits a witness");
  report.pass = report.failures.empty();
  return report;
}

}  // namespace sfmlab
