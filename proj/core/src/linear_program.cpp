#include "charge/linear_program.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace charge::lp {

void LinearProgram::validate() const {
  if (objective.empty()) throw InputError("linear program needs at least one variable");
  if (bounds.size() != objective.size()) {
    throw InputError("bounds/objective length mismatch");
  }
  for (const Row& row : rows) {
    if (row.coeffs.size() != objective.size()) {
      throw InputError("row/objective length mismatch");
    }
  }
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Equality standard form: max chat'z, Ahat z = bhat, z >= 0, bhat >= 0.
// Column map: per original variable a positive column (and a negated one
// when free), a slack column per inequality row, one artificial per row.
struct Standardized {
  std::vector<std::vector<Rational>> cols;  // column-major, length m each
  std::vector<Rational> rhs;                // bhat >= 0
  std::vector<Rational> cost;               // phase-two costs
  std::vector<bool> artificial;
  std::vector<std::size_t> pos_col, neg_col;  // per original variable
  std::vector<std::size_t> art_col;           // per row
  std::vector<int> row_sign;                  // +1 or -1
  bool negated_objective = false;             // true when sense was Minimize
};

Standardized standardize(const LinearProgram& prog) {
  const std::size_t m = prog.num_rows();
  const std::size_t n = prog.num_vars();
  Standardized std_form;
  std_form.negated_objective = prog.sense == Sense::Minimize;
  std_form.row_sign.assign(m, 1);
  std_form.rhs.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (prog.rows[i].rhs < 0) std_form.row_sign[i] = -1;
    std_form.rhs[i] = std_form.row_sign[i] * prog.rows[i].rhs;
  }

  auto add_column = [&](std::vector<Rational> col, Rational cost, bool art) {
    std_form.cols.push_back(std::move(col));
    std_form.cost.push_back(std::move(cost));
    std_form.artificial.push_back(art);
    return std_form.cols.size() - 1;
  };

  std_form.pos_col.assign(n, kNone);
  std_form.neg_col.assign(n, kNone);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> col(m);
    for (std::size_t i = 0; i < m; ++i) {
      col[i] = std_form.row_sign[i] * prog.rows[i].coeffs[j];
    }
    Rational cost = std_form.negated_objective ? -prog.objective[j] : prog.objective[j];
    std_form.pos_col[j] = add_column(col, cost, false);
    if (prog.bounds[j] == Bound::Free) {
      for (auto& entry : col) entry = -entry;
      std_form.neg_col[j] = add_column(col, -cost, false);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (prog.rows[i].rel == Relation::Equal) continue;
    std::vector<Rational> col(m);
    Rational unit = prog.rows[i].rel == Relation::LessEq ? 1 : -1;
    col[i] = std_form.row_sign[i] * unit;
    add_column(std::move(col), Rational(0), false);
  }
  std_form.art_col.assign(m, kNone);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> col(m);
    col[i] = 1;
    std_form.art_col[i] = add_column(std::move(col), Rational(0), true);
  }
  return std_form;
}

class Tableau {
 public:
  explicit Tableau(const Standardized& sf)
      : sf_(sf), m_(sf.rhs.size()), ncols_(sf.cols.size()) {
    rows_.assign(m_, std::vector<Rational>(ncols_ + 1));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] = sf.cols[j][i];
      rows_[i][ncols_] = sf.rhs[i];
    }
    basis_.assign(m_, kNone);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = sf.art_col[i];
    // obj[j] = cB B^-1 A_j - c_j; phase one costs are -1 on artificials.
    obj1_.assign(ncols_ + 1, Rational(0));
    obj2_.assign(ncols_ + 1, Rational(0));
    for (std::size_t j = 0; j <= ncols_; ++j) {
      Rational sum = 0;
      for (std::size_t i = 0; i < m_; ++i) sum -= rows_[i][j];
      obj1_[j] = sum;
    }
    for (std::size_t j = 0; j < ncols_; ++j) {
      obj1_[j] -= phase1_cost(j);
      obj2_[j] = -sf.cost[j];
    }
  }

  Rational phase1_cost(std::size_t j) const { return sf_.artificial[j] ? Rational(-1) : Rational(0); }

  void pivot(std::size_t r, std::size_t s) {
    std::vector<Rational>& prow = rows_[r];
    Rational inv = prow[s];
    for (auto& v : prow) v /= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      Rational factor = row[s];
      if (factor == 0) return;
      for (std::size_t j = 0; j <= ncols_; ++j) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(obj1_);
    eliminate(obj2_);
    basis_[r] = s;
  }

  // Bland's rule: entering = smallest improving column index, leaving =
  // minimum ratio with ties broken by smallest basic column index.
  // Returns kNone on optimality; otherwise the entering column for which
  // no row blocks (unbounded), after performing all bounded pivots.
  std::size_t run(bool phase_one) {
    for (;;) {
      const std::vector<Rational>& obj = phase_one ? obj1_ : obj2_;
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (sf_.artificial[j]) continue;
        if (obj[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rows_[i][ncols_] / rows_[i][entering];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return entering;
      pivot(leave, entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!sf_.artificial[basis_[i]]) continue;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (sf_.artificial[j]) continue;
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row that stays artificial-basic is identically zero outside the
      // artificial block and inert from here on.
    }
  }

  Rational phase1_value() const { return obj1_[ncols_]; }
  Rational phase2_value() const { return obj2_[ncols_]; }

  Rational primal_value(std::size_t col) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] == col) return rows_[i][ncols_];
    }
    return 0;
  }

  // Simplex multipliers read off the artificial (identity) columns.
  Rational phase1_multiplier(std::size_t row) const {
    return obj1_[sf_.art_col[row]] - 1;  // obj1 entry is y_i - c1 with c1 = -1
  }
  Rational phase2_multiplier(std::size_t row) const { return obj2_[sf_.art_col[row]]; }

  Rational column_entry(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  std::size_t basis_at(std::size_t row) const { return basis_[row]; }
  std::size_t num_rows() const { return m_; }

 private:
  const Standardized& sf_;
  std::size_t m_, ncols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> obj1_, obj2_;
  std::vector<std::size_t> basis_;
};

std::vector<Rational> recover_point(const Standardized& sf, const Tableau& tab,
                                    std::size_t nvars) {
  std::vector<Rational> x(nvars, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    x[j] = tab.primal_value(sf.pos_col[j]);
    if (sf.neg_col[j] != kNone) x[j] -= tab.primal_value(sf.neg_col[j]);
  }
  return x;
}

}  // namespace

bool verify_optimal(const LinearProgram& prog, const Optimal& opt) {
  const std::size_t n = prog.num_vars();
  const std::size_t m = prog.num_rows();
  if (opt.primal.size() != n || opt.dual.size() != m) return false;
  // Primal feasibility.
  for (std::size_t j = 0; j < n; ++j) {
    if (prog.bounds[j] == Bound::NonNegative && opt.primal[j] < 0) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += prog.rows[i].coeffs[j] * opt.primal[j];
    switch (prog.rows[i].rel) {
      case Relation::LessEq:
        if (lhs > prog.rows[i].rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != prog.rows[i].rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < prog.rows[i].rhs) return false;
        break;
    }
  }
  // Dual feasibility. For Maximize: <= rows need y >= 0, >= rows y <= 0,
  // and A'y >= c on nonnegative variables, A'y = c on free ones. Minimize
  // flips every inequality.
  const bool maximize = prog.sense == Sense::Maximize;
  for (std::size_t i = 0; i < m; ++i) {
    if (prog.rows[i].rel == Relation::LessEq) {
      if (maximize ? opt.dual[i] < 0 : opt.dual[i] > 0) return false;
    } else if (prog.rows[i].rel == Relation::GreaterEq) {
      if (maximize ? opt.dual[i] > 0 : opt.dual[i] < 0) return false;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational aty = 0;
    for (std::size_t i = 0; i < m; ++i) aty += prog.rows[i].coeffs[j] * opt.dual[i];
    if (prog.bounds[j] == Bound::Free) {
      if (aty != prog.objective[j]) return false;
    } else if (maximize ? aty < prog.objective[j] : aty > prog.objective[j]) {
      return false;
    }
  }
  // Zero duality gap, exact.
  Rational primal_obj = 0;
  for (std::size_t j = 0; j < n; ++j) primal_obj += prog.objective[j] * opt.primal[j];
  Rational dual_obj = 0;
  for (std::size_t i = 0; i < m; ++i) dual_obj += prog.rows[i].rhs * opt.dual[i];
  return primal_obj == opt.value && dual_obj == opt.value;
}

bool verify_infeasible(const LinearProgram& prog, const Infeasible& inf) {
  const std::size_t n = prog.num_vars();
  const std::size_t m = prog.num_rows();
  if (inf.farkas.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (prog.rows[i].rel == Relation::LessEq && inf.farkas[i] < 0) return false;
    if (prog.rows[i].rel == Relation::GreaterEq && inf.farkas[i] > 0) return false;
  }
  // Aggregated row (A'y)'x <= y'b must be unsatisfiable over the bounds.
  for (std::size_t j = 0; j < n; ++j) {
    Rational aty = 0;
    for (std::size_t i = 0; i < m; ++i) aty += prog.rows[i].coeffs[j] * inf.farkas[i];
    if (prog.bounds[j] == Bound::Free) {
      if (aty != 0) return false;
    } else if (aty < 0) {
      return false;
    }
  }
  Rational ytb = 0;
  for (std::size_t i = 0; i < m; ++i) ytb += prog.rows[i].rhs * inf.farkas[i];
  return ytb < 0;
}

bool verify_unbounded(const LinearProgram& prog, const Unbounded& unb) {
  const std::size_t n = prog.num_vars();
  const std::size_t m = prog.num_rows();
  if (unb.feasible.size() != n || unb.ray.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (prog.bounds[j] == Bound::NonNegative) {
      if (unb.feasible[j] < 0 || unb.ray[j] < 0) return false;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational point = 0, dir = 0;
    for (std::size_t j = 0; j < n; ++j) {
      point += prog.rows[i].coeffs[j] * unb.feasible[j];
      dir += prog.rows[i].coeffs[j] * unb.ray[j];
    }
    switch (prog.rows[i].rel) {
      case Relation::LessEq:
        if (point > prog.rows[i].rhs || dir > 0) return false;
        break;
      case Relation::Equal:
        if (point != prog.rows[i].rhs || dir != 0) return false;
        break;
      case Relation::GreaterEq:
        if (point < prog.rows[i].rhs || dir < 0) return false;
        break;
    }
  }
  Rational gain = 0;
  for (std::size_t j = 0; j < n; ++j) gain += prog.objective[j] * unb.ray[j];
  return prog.sense == Sense::Maximize ? gain > 0 : gain < 0;
}

bool verify(const LinearProgram& prog, const Result& result) {
  return std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Optimal>) return verify_optimal(prog, r);
        if constexpr (std::is_same_v<T, Infeasible>) return verify_infeasible(prog, r);
        if constexpr (std::is_same_v<T, Unbounded>) return verify_unbounded(prog, r);
      },
      result);
}

Result solve(const LinearProgram& prog) {
  prog.validate();
  const std::size_t n = prog.num_vars();
  const std::size_t m = prog.num_rows();
  Standardized sf = standardize(prog);
  Tableau tab(sf);

  if (m > 0) {
    std::size_t unbounded_col = tab.run(/*phase_one=*/true);
    if (unbounded_col != kNone) {
      throw InternalError("phase-one objective cannot be unbounded");
    }
    if (tab.phase1_value() < 0) {
      Infeasible inf;
      inf.farkas.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        inf.farkas[i] = sf.row_sign[i] * tab.phase1_multiplier(i);
      }
      if (!verify_infeasible(prog, inf)) {
        throw InternalError("Farkas certificate failed re-verification");
      }
      return inf;
    }
    tab.drive_out_artificials();
  }

  std::size_t entering = tab.run(/*phase_one=*/false);
  if (entering != kNone) {
    Unbounded unb;
    unb.feasible = recover_point(sf, tab, n);
    unb.ray.assign(n, Rational(0));
    auto add_component = [&](std::size_t col, const Rational& amount) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sf.pos_col[j] == col) unb.ray[j] += amount;
        if (sf.neg_col[j] == col) unb.ray[j] -= amount;
      }
    };
    add_component(entering, Rational(1));
    for (std::size_t i = 0; i < tab.num_rows(); ++i) {
      add_component(tab.basis_at(i), -tab.column_entry(i, entering));
    }
    if (!verify_unbounded(prog, unb)) {
      throw InternalError("unboundedness certificate failed re-verification");
    }
    return unb;
  }

  Optimal opt;
  opt.primal = recover_point(sf, tab, n);
  opt.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = sf.row_sign[i] * tab.phase2_multiplier(i);
    opt.dual[i] = sf.negated_objective ? -y : y;
  }
  opt.value = sf.negated_objective ? -tab.phase2_value() : tab.phase2_value();
  if (!verify_optimal(prog, opt)) {
    throw InternalError("optimality certificate failed re-verification");
  }
  return opt;
}

}  // namespace charge::lp
