#include "sfmlab/cut_dimension.hpp"

#include <algorithm>
#include <map>

#include "sfmlab/errors.hpp"

namespace sfmlab {

bool MinimizerFamily::contains(const Subset& s) const { return std::binary_search(sets.begin(), sets.end(), s); }

bool in_scope(const Subset& s, bool nontrivial) { return !nontrivial || s.is_nontrivial(); }

MinimizerFamily enumerate_minimizers(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial) {
  const int n = sys.n();
  require_enumerable(n, kMaxGroundSize, "enumerate_minimizers");
  if (nontrivial && n < 2) throw InvalidArgumentError("nontrivial minimizers need n >= 2");
  if (w.size() != static_cast<std::size_t>(sys.m())) throw SizeMismatchError("weight vector length != m");

  MinimizerFamily family;
  family.nontrivial = nontrivial;
  bool have_min = false;
  for_each_subset(n, [&](const Subset& s) {
    if (!in_scope(s, nontrivial)) return;
    Rational value = eval_weight_based(sys, w, s);
    if (!have_min || value < family.min_value) {
      if (have_min) family.next_value = family.min_value;
      family.min_value = std::move(value);
      family.sets.assign(1, s);
      have_min = true;
    } else if (value == family.min_value) {
      family.sets.push_back(s);
    } else if (!family.next_value || value < *family.next_value) {
      family.next_value = std::move(value);
    }
  });
  return family;
}

linalg::Vector IndicatorVector::as_rational() const {
  linalg::Vector v;
  v.reserve(coords.size());
  for (auto c : coords) v.emplace_back(static_cast<long>(c));
  return v;
}

IndicatorVector indicator_vector(const HyperedgeSystem& sys, const WeightVector& w, const Subset& s) {
  if (w.size() != static_cast<std::size_t>(sys.m())) throw SizeMismatchError("weight vector length != m");
  IndicatorVector v{std::vector<std::uint8_t>(static_cast<std::size_t>(sys.m()), 0)};
  for (int idx : sys.active(s)) {
    if (w.positive(static_cast<std::size_t>(idx))) v.coords[idx] = 1;
  }
  return v;
}

CutDimension cut_dimension(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial) {
  if (sys.m() > kMaxHyperedges) {
    throw EnumerationLimitError("cut_dimension: m = " + std::to_string(sys.m()) + " exceeds " +
                                std::to_string(kMaxHyperedges));
  }
  CutDimension out;
  out.minimizers = enumerate_minimizers(sys, w, nontrivial);
  linalg::IncrementalBasis basis(static_cast<std::size_t>(sys.m()));
  // Identical indicator vectors (complement pairs of symmetric systems) are
  // skipped without another elimination pass.
  std::map<std::vector<std::uint8_t>, bool> seen;
  for (const auto& s : out.minimizers.sets) {
    auto v = indicator_vector(sys, w, s);
    if (!seen.emplace(v.coords, true).second) continue;
    if (basis.try_add(v.as_rational())) out.basis.push_back(s);
  }
  out.d = static_cast<int>(out.basis.size());
  return out;
}

std::vector<Subset> BaseSets::sets(int n) const {
  std::vector<Subset> out;
  if (include_empty) out.push_back(Subset::empty(n));
  for (const auto& s : per_element) {
    if (s) out.push_back(*s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BaseSets compute_base_sets(const MinimizerFamily& family, int n) {
  BaseSets out;
  out.per_element.assign(static_cast<std::size_t>(n), std::nullopt);
  for (const auto& s : family.sets) {
    if (s.ground_size() != n) throw SizeMismatchError("compute_base_sets: minimizer over wrong ground set");
    if (s.is_empty()) out.include_empty = true;
    for (int i : s.elements()) {
      auto& slot = out.per_element[i - 1];
      slot = slot ? (*slot & s) : s;
    }
  }
  return out;
}

const char* to_string(SpanBoundFailure f) {
  switch (f) {
    case SpanBoundFailure::kNotClosed: return "not_closed";
    case SpanBoundFailure::kNotUnionOfBaseSets: return "not_union_of_base_sets";
    case SpanBoundFailure::kModularIdentity: return "modular_identity";
    case SpanBoundFailure::kNotInSpan: return "not_in_span";
    case SpanBoundFailure::kTooManyBaseSets: return "too_many_base_sets";
  }
  return "?";
}

SpanBoundReport verify_span_bound(const HyperedgeSystem& sys, const WeightVector& w, bool nontrivial) {
  const int n = sys.n();
  require_enumerable(n, kSpanBoundLimit, "verify_span_bound");
  SpanBoundReport report;
  report.n = n;
  const CutDimension dim = cut_dimension(sys, w, nontrivial);
  const MinimizerFamily& family = dim.minimizers;
  report.dimension = dim.d;
  report.minimizer_count = family.sets.size();

  auto fail = [&](SpanBoundFailure kind, Subset s, std::optional<Subset> partner, std::string detail) {
    report.pass = false;
    report.failure = kind;
    report.counterexample = s;
    report.partner = partner;
    report.detail = std::move(detail);
    return report;
  };

  std::map<Subset, IndicatorVector> vectors;
  for (const auto& s : family.sets) vectors.emplace(s, indicator_vector(sys, w, s));

  const auto& sets = family.sets;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const Subset meet = sets[a] & sets[b];
      const Subset join = sets[a] | sets[b];
      if (!family.contains(meet)) {
        return fail(SpanBoundFailure::kNotClosed, meet, std::nullopt,
                    sets[a].to_string() + " ∩ " + sets[b].to_string() + " is not a minimizer");
      }
      if (!family.contains(join)) {
        return fail(SpanBoundFailure::kNotClosed, join, std::nullopt,
                    sets[a].to_string() + " ∪ " + sets[b].to_string() + " is not a minimizer");
      }
    }
  }

  const BaseSets base = compute_base_sets(family, n);
  for (const auto& s : sets) {
    Subset rebuilt = Subset::empty(n);
    for (int i : s.elements()) rebuilt = rebuilt | *base.per_element[i - 1];
    if (rebuilt != s) {
      return fail(SpanBoundFailure::kNotUnionOfBaseSets, s, std::nullopt,
                  "union of base sets gives " + rebuilt.to_string());
    }
  }

  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const auto& vs = vectors.at(sets[a]).coords;
      const auto& vt = vectors.at(sets[b]).coords;
      const auto& vj = vectors.at(sets[a] | sets[b]).coords;
      const auto& vm = vectors.at(sets[a] & sets[b]).coords;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (vj[k] + vm[k] != vs[k] + vt[k]) {
          return fail(SpanBoundFailure::kModularIdentity, sets[a], sets[b],
                      "coordinate " + std::to_string(k) + " breaks v^(S∪T) + v^(S∩T) = v^S + v^T");
        }
      }
    }
  }

  const auto base_sets = base.sets(n);
  report.base_set_count = static_cast<int>(base_sets.size());
  if (report.base_set_count > n + 1) {
    return fail(SpanBoundFailure::kTooManyBaseSets, base_sets.back(), std::nullopt, "more than n + 1 base sets");
  }
  linalg::IncrementalBasis span(static_cast<std::size_t>(sys.m()));
  for (const auto& b : base_sets) span.try_add(vectors.at(b).as_rational());
  for (const auto& s : sets) {
    if (!span.contains(vectors.at(s).as_rational())) {
      return fail(SpanBoundFailure::kNotInSpan, s, std::nullopt, "indicator vector outside base-set span");
    }
  }
  return report;
}

}  // namespace sfmlab
