#include "charge/vertex_enum.hpp"

#include <algorithm>
#include <set>

#include "charge/linear_program.hpp"

namespace charge::polytope {

namespace {

// Recursively extends a prospective active set, keeping a row-reduced copy
// so rank-deficient branches are cut early. Active sets are visited in
// lexicographic order of their row indices.
struct ActiveSetSearch {
  const linalg::Matrix& rows;
  std::size_t dim;
  std::vector<std::size_t> chosen;
  linalg::Matrix reduced;  // echelon form of the chosen rows
  std::vector<std::vector<std::size_t>> found;

  bool adds_rank(const std::vector<Rational>& row) {
    std::vector<Rational> work = row;
    for (const auto& pivot_row : reduced) {
      std::size_t pc = 0;
      while (pc < dim && pivot_row[pc] == 0) ++pc;
      if (pc == dim) continue;
      if (work[pc] != 0) {
        Rational factor = work[pc] / pivot_row[pc];
        for (std::size_t j = 0; j < dim; ++j) work[j] -= factor * pivot_row[j];
      }
    }
    for (std::size_t j = 0; j < dim; ++j) {
      if (work[j] != 0) {
        reduced.push_back(std::move(work));
        return true;
      }
    }
    return false;
  }

  void search(std::size_t next) {
    if (chosen.size() == dim) {
      found.push_back(chosen);
      return;
    }
    for (std::size_t i = next; i + (dim - chosen.size()) <= rows.size(); ++i) {
      std::size_t saved = reduced.size();
      if (!adds_rank(rows[i])) continue;
      chosen.push_back(i);
      search(i + 1);
      chosen.pop_back();
      reduced.resize(saved);
    }
  }
};

}  // namespace

std::vector<std::vector<Rational>> enumerate_vertices(const HRep& poly) {
  auto affine = linalg::solve_affine(poly.eq, poly.eq_rhs, poly.dim);
  std::vector<std::vector<Rational>> vertices;
  if (!affine) return vertices;
  const std::size_t k = affine->nullspace.size();

  // Inequalities expressed in the nullspace coordinates t: C(x0 + Nt) <= d.
  linalg::Matrix c_red(poly.ineq.size(), std::vector<Rational>(k));
  std::vector<Rational> d_red(poly.ineq.size());
  for (std::size_t i = 0; i < poly.ineq.size(); ++i) {
    Rational shift = 0;
    for (std::size_t j = 0; j < poly.dim; ++j) shift += poly.ineq[i][j] * affine->point[j];
    d_red[i] = poly.ineq_rhs[i] - shift;
    for (std::size_t b = 0; b < k; ++b) {
      Rational dot = 0;
      for (std::size_t j = 0; j < poly.dim; ++j) {
        dot += poly.ineq[i][j] * affine->nullspace[b][j];
      }
      c_red[i][b] = dot;
    }
  }

  auto lift = [&](const std::vector<Rational>& t) {
    std::vector<Rational> x = affine->point;
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t j = 0; j < poly.dim; ++j) x[j] += t[b] * affine->nullspace[b][j];
    }
    return x;
  };

  std::set<std::vector<Rational>> unique;
  if (k == 0) {
    std::vector<Rational> t;
    bool ok = true;
    for (std::size_t i = 0; i < c_red.size() && ok; ++i) ok = d_red[i] >= 0;
    if (ok) unique.insert(lift(t));
  } else {
    ActiveSetSearch search{c_red, k, {}, {}, {}};
    search.search(0);
    for (const auto& active : search.found) {
      linalg::Matrix a;
      std::vector<Rational> b;
      for (std::size_t i : active) {
        a.push_back(c_red[i]);
        b.push_back(d_red[i]);
      }
      auto t = linalg::solve(std::move(a), std::move(b), k);
      if (!t) continue;  // nonsingular by construction, but stay safe
      bool feasible = true;
      for (std::size_t i = 0; i < c_red.size() && feasible; ++i) {
        Rational lhs = 0;
        for (std::size_t bidx = 0; bidx < k; ++bidx) lhs += c_red[i][bidx] * (*t)[bidx];
        feasible = lhs <= d_red[i];
      }
      if (feasible) unique.insert(lift(*t));
    }
  }
  vertices.assign(unique.begin(), unique.end());
  return vertices;
}

}  // namespace charge::polytope
