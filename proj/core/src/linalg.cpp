#include "charge/linalg.hpp"

#include <algorithm>

namespace charge::linalg {

namespace {

// Gauss-Jordan with partial ordering by column; returns pivot column per
// row-echelon row. `rhs` may be null when only the rank matters.
std::vector<std::size_t> reduce(Matrix& a, std::vector<Rational>* rhs) {
  std::vector<std::size_t> pivot_cols;
  if (a.empty()) return pivot_cols;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
    Rational inv = a[row][col];
    for (auto& v : a[row]) v /= inv;
    if (rhs) (*rhs)[row] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational factor = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[row][j];
      if (rhs) (*rhs)[i] -= factor * (*rhs)[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(Matrix a) { return reduce(a, nullptr).size(); }

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b,
                                           std::size_t num_vars) {
  auto affine = solve_affine(std::move(a), std::move(b), num_vars);
  if (!affine) return std::nullopt;
  return affine->point;
}

std::optional<AffineSolution> solve_affine(Matrix a, std::vector<Rational> b,
                                           std::size_t num_vars) {
  const std::size_t rows = a.size();
  const std::size_t cols = num_vars;
  std::vector<std::size_t> pivot_cols = reduce(a, &b);
  for (std::size_t i = pivot_cols.size(); i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  AffineSolution out;
  out.point.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    out.point[pivot_cols[r]] = b[r];
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col : pivot_cols) is_pivot[col] = true;
  for (std::size_t col = 0; col < cols; ++col) {
    if (is_pivot[col]) continue;
    std::vector<Rational> basis(cols, Rational(0));
    basis[col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      basis[pivot_cols[r]] = -a[r][col];
    }
    out.nullspace.push_back(std::move(basis));
  }
  return out;
}

}  // namespace charge::linalg
