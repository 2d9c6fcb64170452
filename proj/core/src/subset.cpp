#include "sfmlab/subset.hpp"

#include "sfmlab/errors.hpp"

namespace sfmlab {

Subset::Subset(int n, Mask bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxGroundSize) {
    throw InvalidArgumentError("ground-set size " + std::to_string(n) + " outside [1, " +
                               std::to_string(kMaxGroundSize) + "]");
  }
  if ((bits & ~full_mask(n)) != 0) {
    throw InvalidArgumentError("subset mask has bits above element " + std::to_string(n));
  }
}

Subset Subset::full(int n) { return Subset(n, full_mask(n)); }

Subset Subset::singleton(int n, int element) { return Subset::empty(n).with(element); }

Subset Subset::of(int n, std::initializer_list<int> elements) {
  return of(n, std::vector<int>(elements));
}

Subset Subset::of(int n, const std::vector<int>& elements) {
  Subset s = Subset::empty(n);
  for (int e : elements) s = s.with(e);
  return s;
}

Subset Subset::with(int element) const {
  if (element < 1 || element > n_) {
    throw InvalidArgumentError("element " + std::to_string(element) + " not in [1, " +
                               std::to_string(n_) + "]");
  }
  return Subset(n_, bits_ | (Mask{1} << (element - 1)), Unchecked{});
}

Subset Subset::without(int element) const {
  if (element < 1 || element > n_) {
    throw InvalidArgumentError("element " + std::to_string(element) + " not in [1, " +
                               std::to_string(n_) + "]");
  }
  return Subset(n_, bits_ & ~(Mask{1} << (element - 1)), Unchecked{});
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Subset operator|(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) throw SizeMismatchError("union of subsets over different ground sets");
  return Subset(a.n_, a.bits_ | b.bits_, Subset::Unchecked{});
}

Subset operator&(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) throw SizeMismatchError("intersection of subsets over different ground sets");
  return Subset(a.n_, a.bits_ & b.bits_, Subset::Unchecked{});
}

void require_enumerable(int n, int limit, const char* what) {
  if (n > limit) {
    throw EnumerationLimitError(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds enumeration limit " + std::to_string(limit));
  }
}

}  // namespace sfmlab
