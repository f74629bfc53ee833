#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <variant>

#include "charge/linear_program.hpp"
#include "support/generators.hpp"

using namespace charge;
using namespace charge::lp;

namespace {

LinearProgram max_single_var(Relation rel, Rational rhs, Bound bound) {
  LinearProgram prog;
  prog.sense = Sense::Maximize;
  prog.objective = {Rational(1)};
  if (rel != Relation::Equal || rhs != 0) {
    prog.rows.push_back({{Rational(1)}, rel, rhs});
  }
  prog.bounds = {bound};
  return prog;
}

}  // namespace

TEST_CASE("maximize x subject to x <= 1, x >= 0 attains 1") {
  LinearProgram prog = max_single_var(Relation::LessEq, Rational(1), Bound::NonNegative);
  Result res = solve(prog);
  auto* opt = std::get_if<Optimal>(&res);
  REQUIRE(opt != nullptr);
  CHECK(opt->primal == std::vector<Rational>{Rational(1)});
  CHECK(opt->value == Rational(1));
  CHECK(verify(prog, res));
}

TEST_CASE("maximize x subject to x <= -1, x >= 0 is infeasible with Farkas row") {
  LinearProgram prog = max_single_var(Relation::LessEq, Rational(-1), Bound::NonNegative);
  Result res = solve(prog);
  auto* inf = std::get_if<Infeasible>(&res);
  REQUIRE(inf != nullptr);
  // One row; the aggregate 0 <= -1 needs a positive multiplier on it.
  REQUIRE(inf->farkas.size() == 1);
  CHECK(inf->farkas[0] > 0);
  CHECK(verify(prog, res));
}

TEST_CASE("maximize free x with no rows is unbounded along +1") {
  LinearProgram prog;
  prog.sense = Sense::Maximize;
  prog.objective = {Rational(1)};
  prog.bounds = {Bound::Free};
  Result res = solve(prog);
  auto* unb = std::get_if<Unbounded>(&res);
  REQUIRE(unb != nullptr);
  CHECK(unb->ray == std::vector<Rational>{Rational(1)});
  CHECK(verify(prog, res));
}

TEST_CASE("minimize sense and equality rows") {
  // min x1 + x2  s.t.  x1 + 2 x2 = 3, x1 - x2 >= 0, x >= 0.
  LinearProgram prog;
  prog.sense = Sense::Minimize;
  prog.objective = {Rational(1), Rational(1)};
  prog.rows.push_back({{Rational(1), Rational(2)}, Relation::Equal, Rational(3)});
  prog.rows.push_back({{Rational(1), Rational(-1)}, Relation::GreaterEq, Rational(0)});
  prog.bounds = {Bound::NonNegative, Bound::NonNegative};
  Result res = solve(prog);
  auto* opt = std::get_if<Optimal>(&res);
  REQUIRE(opt != nullptr);
  // Hand enumeration of the segment {x1 + 2 x2 = 3, x1 >= x2 >= 0}:
  // endpoints (3, 0) with cost 3 and (1, 1) with cost 2.
  CHECK(opt->value == Rational(2));
  CHECK(opt->primal == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(verify(prog, res));
}

TEST_CASE("input validation") {
  LinearProgram prog;
  prog.objective = {};
  prog.bounds = {};
  CHECK_THROWS_AS(solve(prog), InputError);

  prog.objective = {Rational(1)};
  prog.bounds = {Bound::NonNegative};
  prog.rows.push_back({{Rational(1), Rational(2)}, Relation::LessEq, Rational(0)});
  CHECK_THROWS_AS(solve(prog), InputError);
}

TEST_CASE("determinism: identical programs give identical results") {
  testing::Rng rng(20240915);
  for (int trial = 0; trial < 25; ++trial) {
    LinearProgram prog;
    prog.sense = trial % 2 ? Sense::Minimize : Sense::Maximize;
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    std::size_t m = static_cast<std::size_t>(rng.integer(0, 4));
    prog.objective = rng.rational_vector(n, 5, 4);
    for (std::size_t i = 0; i < m; ++i) {
      Row row;
      row.coeffs = rng.rational_vector(n, 5, 4);
      row.rel = static_cast<Relation>(rng.integer(0, 2));
      row.rhs = rng.rational(5, 4);
      prog.rows.push_back(row);
    }
    for (std::size_t j = 0; j < n; ++j) {
      prog.bounds.push_back(rng.integer(0, 1) ? Bound::Free : Bound::NonNegative);
    }
    Result a = solve(prog);
    Result b = solve(prog);
    CHECK(a.index() == b.index());
    CHECK(verify(prog, a));
    std::visit(
        [&](const auto& lhs) {
          using T = std::decay_t<decltype(lhs)>;
          const auto& rhs = std::get<T>(b);
          if constexpr (std::is_same_v<T, Optimal>) {
            CHECK(lhs.primal == rhs.primal);
            CHECK(lhs.dual == rhs.dual);
            CHECK(lhs.value == rhs.value);
          } else if constexpr (std::is_same_v<T, Infeasible>) {
            CHECK(lhs.farkas == rhs.farkas);
          } else {
            CHECK(lhs.feasible == rhs.feasible);
            CHECK(lhs.ray == rhs.ray);
          }
        },
        a);
  }
}

TEST_CASE("certificates verify on random degenerate-prone programs") {
  testing::Rng rng(77);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram prog;
    prog.sense = trial % 2 ? Sense::Minimize : Sense::Maximize;
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
    std::size_t m = static_cast<std::size_t>(rng.integer(0, 6));
    prog.objective = rng.rational_vector(n, 3, 2);
    for (std::size_t i = 0; i < m; ++i) {
      Row row;
      // Coefficients from {-1, 0, 1} and rhs from {-1, 0, 1} provoke
      // degeneracy and infeasibility in roughly equal measure.
      row.coeffs.resize(n);
      for (auto& c : row.coeffs) c = rng.integer(-1, 1);
      row.rel = static_cast<Relation>(rng.integer(0, 2));
      row.rhs = rng.integer(-1, 1);
      prog.rows.push_back(row);
    }
    for (std::size_t j = 0; j < n; ++j) {
      prog.bounds.push_back(rng.integer(0, 3) == 0 ? Bound::Free : Bound::NonNegative);
    }
    Result res = solve(prog);
    CHECK(verify(prog, res));
    if (std::holds_alternative<Optimal>(res)) ++optimal;
    if (std::holds_alternative<Infeasible>(res)) ++infeasible;
    if (std::holds_alternative<Unbounded>(res)) ++unbounded;
  }
  // The generator must actually exercise all three verdicts.
  CHECK(optimal > 20);
  CHECK(infeasible > 20);
  CHECK(unbounded > 20);
}
