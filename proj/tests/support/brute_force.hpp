#ifndef CHARGE_TESTS_SUPPORT_BRUTE_FORCE_HPP
#define CHARGE_TESTS_SUPPORT_BRUTE_FORCE_HPP

// Self-contained oracles for cross-checking the library: an independent
// Gaussian elimination and an active-set feasibility decider for systems
// { m >= 0, E m = e }. Deliberately shares no code with charge::linalg or
// the simplex path it audits.

#include <optional>
#include <vector>

#include "charge/rational.hpp"

namespace charge::testing {

// Solves the square-or-rectangular system rows * x = rhs; returns any
// solution (free variables zero) or nullopt when inconsistent.
inline std::optional<std::vector<Rational>> oracle_solve(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t nvars) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t c = 0; c < nvars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = rows[r][c];
    for (auto& v : rows[r]) v /= inv;
    rhs[r] /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < nvars; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(nvars, Rational(0));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = rhs[i];
  return x;
}

// Decides whether { m in R^n : m >= 0, E m = e } is nonempty by trying
// every subset of coordinates pinned to zero. The region sits inside a
// scaled simplex whenever E contains a normalization row, so nonemptiness
// is equivalent to some pinned system having a nonnegative solution.
inline bool oracle_nonneg_system_feasible(const std::vector<std::vector<Rational>>& eq,
                                          const std::vector<Rational>& rhs, std::size_t n) {
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    auto rows = eq;
    auto b = rhs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        std::vector<Rational> pin(n, Rational(0));
        pin[i] = 1;
        rows.push_back(std::move(pin));
        b.push_back(Rational(0));
      }
    }
    auto x = oracle_solve(std::move(rows), std::move(b), n);
    if (!x) continue;
    bool ok = true;
    for (const auto& v : *x) {
      if (v < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Re-check the equalities on the candidate point.
    for (std::size_t i = 0; i < eq.size() && ok; ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += eq[i][j] * (*x)[j];
      ok = dot == rhs[i];
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace charge::testing

#endif
