#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sfmlab/rational.hpp"

namespace sfmlab::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major; all rows share one length

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

// Rank by fraction-exact Gaussian elimination; the pivot in each column is the
// first nonzero entry at or below the current row.
std::size_t rank(const Matrix& rows);

// Basis of {x : A x = 0} for A with `cols` columns. One vector per free
// column, in increasing column order, with that free variable set to 1 and
// the other free variables set to 0.
std::vector<Vector> nullspace(const Matrix& a, std::size_t cols);

// Greedily grown basis of a row space. Each stored row remembers how it was
// built from the accepted input vectors, so membership tests can also return
// coordinates with respect to the accepted vectors.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dimension) : dimension_(dimension) {}

  // Adds v if it is independent of the vectors accepted so far.
  bool try_add(const Vector& v);

  // Coefficients c with v = Σ c_k · accepted_k, or nullopt if v is outside the span.
  std::optional<Vector> express(const Vector& v) const;

  bool contains(const Vector& v) const { return express(v).has_value(); }

  std::size_t size() const { return accepted_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Vector>& accepted() const { return accepted_; }

 private:
  struct EchelonRow {
    Vector row;
    std::size_t pivot;
    Vector combination;  // row = Σ combination[k] · accepted_[k]
  };

  // Reduces v against every stored row. Returns the residual and fills
  // `combination` with the coefficients subtracted along the way.
  Vector reduce(const Vector& v, Vector& combination) const;

  std::size_t dimension_;
  std::vector<Vector> accepted_;
  std::vector<EchelonRow> rows_;
};

}  // namespace sfmlab::linalg
