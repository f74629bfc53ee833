#ifndef CHARGE_LINEAR_PROGRAM_HPP
#define CHARGE_LINEAR_PROGRAM_HPP

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "charge/rational.hpp"

namespace charge {

/// Malformed caller input (dimension mismatches, broken invariants of a
/// domain object, out-of-range requests).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computed certificate failed its own re-verification, or an internal
/// exactness invariant broke. Never caused by user data.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

namespace lp {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEq, Equal, GreaterEq };
enum class Bound { NonNegative, Free };

struct Row {
  std::vector<Rational> coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// Dense rational LP:  opt c'x  s.t.  each row a'x (<=|=|>=) b,  x_j >= 0 or free.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<Rational> objective;
  std::vector<Row> rows;
  std::vector<Bound> bounds;  // one per variable

  std::size_t num_vars() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }
  /// Throws InputError unless all dimensions agree and there is >= 1 variable.
  void validate() const;
};

/// Primal/dual pair with zero duality gap, both sides exact.
struct Optimal {
  std::vector<Rational> primal;
  std::vector<Rational> dual;  // one multiplier per row
  Rational value;
};

/// Farkas certificate: multipliers y (signed per row relation) aggregating
/// the rows into  (A'y)'x <= y'b  with  A'y >= 0 on nonnegative variables,
/// A'y = 0 on free variables, and y'b < 0.
struct Infeasible {
  std::vector<Rational> farkas;
};

/// Feasible point plus an improving ray: the ray preserves every row for
/// any nonnegative step and strictly improves the objective.
struct Unbounded {
  std::vector<Rational> feasible;
  std::vector<Rational> ray;
};

using Result = std::variant<Optimal, Infeasible, Unbounded>;

/// Two-phase primal simplex on exact rationals, Bland's anti-cycling rule
/// with smallest-index tie-breaking. Deterministic: identical inputs give
/// bit-identical results. Every certificate is re-verified before return;
/// a verification failure throws InternalError.
Result solve(const LinearProgram& lp);

/// Re-checks a result against the original program with fresh arithmetic.
/// Public so callers (and the CLI --check flag) can audit certificates.
bool verify(const LinearProgram& lp, const Result& result);

bool verify_optimal(const LinearProgram& lp, const Optimal& opt);
bool verify_infeasible(const LinearProgram& lp, const Infeasible& inf);
bool verify_unbounded(const LinearProgram& lp, const Unbounded& unb);

}  // namespace lp
}  // namespace charge

#endif
