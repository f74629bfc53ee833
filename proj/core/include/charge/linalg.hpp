#ifndef CHARGE_LINALG_HPP
#define CHARGE_LINALG_HPP

#include <optional>
#include <vector>

#include "charge/rational.hpp"

namespace charge::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Row-reduces a copy of `a` and returns its rank.
std::size_t rank(Matrix a);

/// Solves A x = b exactly (row-major A, m x num_vars; m may be 0).
/// Returns the canonical solution with every non-pivot variable at zero,
/// or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b,
                                           std::size_t num_vars);

/// Particular solution plus a basis of the nullspace, or nullopt when
/// A x = b is inconsistent. The affine solution set is x0 + span(basis).
struct AffineSolution {
  std::vector<Rational> point;
  Matrix nullspace;  // one basis vector per row
};
std::optional<AffineSolution> solve_affine(Matrix a, std::vector<Rational> b,
                                           std::size_t num_vars);

}  // namespace charge::linalg

#endif
