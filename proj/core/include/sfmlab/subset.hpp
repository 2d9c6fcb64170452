#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sfmlab {

// Largest ground set any routine will accept; 2^24 subsets keeps exhaustive
// scans bounded.
inline constexpr int kMaxGroundSize = 24;

// A subset of the ground set [n] = {1, ..., n}, stored as a bitmask where
// element i occupies bit i-1. Comparison orders by bitmask value, which is
// the "lexicographic" order used for every reported witness.
class Subset {
 public:
  using Mask = std::uint32_t;

  // Throws InvalidArgumentError unless 1 <= n <= kMaxGroundSize and bits fit.
  Subset(int n, Mask bits);

  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n);
  static Subset singleton(int n, int element);
  static Subset of(int n, std::initializer_list<int> elements);
  static Subset of(int n, const std::vector<int>& elements);

  int ground_size() const { return n_; }
  Mask bits() const { return bits_; }

  bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full_mask(n_); }
  bool is_nontrivial() const { return !is_empty() && !is_full(); }
  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  Subset complement() const { return Subset(n_, ~bits_ & full_mask(n_), Unchecked{}); }
  Subset with(int element) const;
  Subset without(int element) const;

  // Ascending 1-based element list.
  std::vector<int> elements() const;

  // "{1,3}" style; "{}" for the empty set.
  std::string to_string() const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static constexpr Mask full_mask(int n) {
    return n >= 32 ? ~Mask{0} : static_cast<Mask>((Mask{1} << n) - 1);
  }

 private:
  struct Unchecked {};
  Subset(int n, Mask bits, Unchecked) : n_(n), bits_(bits) {}

  int n_;
  Mask bits_;
};

// Throws EnumerationLimitError when n exceeds `limit`, naming `what`.
void require_enumerable(int n, int limit, const char* what);

// Calls fn(Subset) for every subset of [n] in increasing bitmask order.
template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    fn(Subset(n, static_cast<Subset::Mask>(bits)));
  }
}

}  // namespace sfmlab
