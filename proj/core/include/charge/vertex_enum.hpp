#ifndef CHARGE_VERTEX_ENUM_HPP
#define CHARGE_VERTEX_ENUM_HPP

#include <vector>

#include "charge/linalg.hpp"
#include "charge/rational.hpp"

namespace charge::polytope {

/// Bounded polyhedron { x : Ex = e, Cx <= d } given row-major.
struct HRep {
  linalg::Matrix eq;
  std::vector<Rational> eq_rhs;
  linalg::Matrix ineq;
  std::vector<Rational> ineq_rhs;
  std::size_t dim = 0;
};

/// Exact vertex set of a bounded polyhedron, duplicate-free and sorted
/// lexicographically. Enumerates nonsingular active sets after reducing
/// the equalities away; empty result means the polyhedron is empty
/// (boundedness makes vertices exhaustive).
std::vector<std::vector<Rational>> enumerate_vertices(const HRep& poly);

}  // namespace charge::polytope

#endif
