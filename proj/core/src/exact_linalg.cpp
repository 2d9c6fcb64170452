#include "sfmlab/exact_linalg.hpp"

#include "sfmlab/errors.hpp"

namespace sfmlab::linalg {

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw SizeMismatchError("dot product of vectors with different lengths");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  }
  return sum;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in order.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && sgn(a[pick][col]) == 0) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (sgn(a[row][c]) != 0) a[r][c] -= factor * a[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_width(const Matrix& a, std::size_t cols) {
  for (const auto& r : a) {
    if (r.size() != cols) throw SizeMismatchError("matrix rows have inconsistent lengths");
  }
}

}  // namespace

std::size_t rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  check_width(rows, cols);
  Matrix copy = rows;
  return rref(copy, cols).size();
}

std::vector<Vector> nullspace(const Matrix& a, std::size_t cols) {
  check_width(a, cols);
  Matrix m = a;
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = -m[r][free];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Vector IncrementalBasis::reduce(const Vector& v, Vector& combination) const {
  if (v.size() != dimension_) throw SizeMismatchError("vector length does not match basis dimension");
  Vector residual = v;
  combination.assign(accepted_.size(), Rational(0));
  for (const auto& r : rows_) {
    if (sgn(residual[r.pivot]) == 0) continue;
    const Rational factor = residual[r.pivot] / r.row[r.pivot];
    for (std::size_t c = 0; c < dimension_; ++c) {
      if (sgn(r.row[c]) != 0) residual[c] -= factor * r.row[c];
    }
    for (std::size_t k = 0; k < r.combination.size(); ++k) {
      if (sgn(r.combination[k]) != 0) combination[k] += factor * r.combination[k];
    }
  }
  return residual;
}

bool IncrementalBasis::try_add(const Vector& v) {
  Vector combination;
  Vector residual = reduce(v, combination);
  std::size_t pivot = 0;
  while (pivot < dimension_ && sgn(residual[pivot]) == 0) ++pivot;
  if (pivot == dimension_) return false;

  // residual = v − Σ combination_k accepted_k, and v becomes accepted_[new].
  Vector row_combination(accepted_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < combination.size(); ++k) row_combination[k] = -combination[k];
  row_combination.back() = 1;
  accepted_.push_back(v);
  rows_.push_back({std::move(residual), pivot, std::move(row_combination)});
  return true;
}

std::optional<Vector> IncrementalBasis::express(const Vector& v) const {
  Vector combination;
  Vector residual = reduce(v, combination);
  if (!is_zero(residual)) return std::nullopt;
  return combination;
}

}  // namespace sfmlab::linalg
