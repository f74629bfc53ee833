#include "charge/coherence.hpp"

#include <algorithm>

#include "charge/linalg.hpp"
#include "charge/linear_program.hpp"
#include "charge/vertex_enum.hpp"

namespace charge {

namespace {

// Feasibility program for M(K): m >= 0, sum m = 1, m(g_i) <= 0 per
// generator. Infeasibility Farkas rows scale into a sure-win combination.
lp::LinearProgram separating_program(const ConeSpec& cone) {
  const std::size_t n = cone.scenario().size();
  lp::LinearProgram prog;
  prog.sense = lp::Sense::Maximize;
  prog.objective.assign(n, Rational(0));
  prog.bounds.assign(n, lp::Bound::NonNegative);
  prog.rows.push_back({std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1)});
  for (const auto& g : cone.generators()) {
    prog.rows.push_back({g.values, lp::Relation::LessEq, Rational(0)});
  }
  return prog;
}

SureWin sure_win_from_farkas(const ConeSpec& cone, const std::vector<Rational>& farkas) {
  // farkas[0] belongs to the normalization row and is strictly negative;
  // scaling the generator multipliers by -1/farkas[0] dominates 1.
  SureWin win;
  Rational scale = -farkas[0];
  if (scale <= 0) throw InternalError("Farkas certificate lost the normalization row");
  win.coefficients.resize(cone.num_generators());
  for (std::size_t i = 0; i < cone.num_generators(); ++i) {
    win.coefficients[i] = farkas[i + 1] / scale;
  }
  if (!verify_sure_win(cone, win)) {
    throw InternalError("sure-win certificate failed re-verification");
  }
  return win;
}

CoherenceVerdict solve_separating(const ConeSpec& cone) {
  lp::Result res = lp::solve(separating_program(cone));
  if (auto* opt = std::get_if<lp::Optimal>(&res)) {
    Separating sep{Probability(opt->primal)};
    if (!verify_separating(cone, sep)) {
      throw InternalError("separating probability failed re-verification");
    }
    return sep;
  }
  if (auto* inf = std::get_if<lp::Infeasible>(&res)) {
    return sure_win_from_farkas(cone, inf->farkas);
  }
  throw InternalError("separating feasibility program cannot be unbounded");
}

}  // namespace

bool verify_sure_win(const ConeSpec& cone, const SureWin& win) {
  if (win.coefficients.size() != cone.num_generators()) return false;
  for (const auto& c : win.coefficients) {
    if (c < 0) return false;
  }
  PayoffFn k = cone.combine(win.coefficients);
  for (std::size_t w = 0; w < k.size(); ++w) {
    if (k[w] < 1) return false;
  }
  return true;
}

bool verify_separating(const ConeSpec& cone, const Separating& sep) {
  if (sep.m.size() != cone.scenario().size()) return false;
  for (const auto& g : cone.generators()) {
    if (sep.m.expectation(g) > 0) return false;
  }
  return true;
}

CoherenceVerdict detect_sure_win(const ConeSpec& cone) { return solve_separating(cone); }

HedgePrice superhedge_price(const ConeSpec& cone, const PayoffFn& claim) {
  const std::size_t n = cone.scenario().size();
  if (claim.size() != n) throw InputError("claim/scenario length mismatch");
  const std::size_t g = cone.num_generators();

  // minimize alpha  s.t.  alpha + sum_i lambda_i g_i >= f, lambda >= 0.
  lp::LinearProgram prog;
  prog.sense = lp::Sense::Minimize;
  prog.objective.assign(1 + g, Rational(0));
  prog.objective[0] = 1;
  prog.bounds.assign(1 + g, lp::Bound::NonNegative);
  prog.bounds[0] = lp::Bound::Free;
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<Rational> row(1 + g);
    row[0] = 1;
    for (std::size_t i = 0; i < g; ++i) row[1 + i] = cone.generators()[i][w];
    prog.rows.push_back({std::move(row), lp::Relation::GreaterEq, claim[w]});
  }

  lp::Result res = lp::solve(prog);
  if (std::holds_alternative<lp::Unbounded>(res)) return MinusInfinity{};
  auto* opt = std::get_if<lp::Optimal>(&res);
  if (!opt) throw InternalError("hedge program is always feasible");

  HedgeOptimum h{opt->value, opt->primal[0],
                 std::vector<Rational>(opt->primal.begin() + 1, opt->primal.end()),
                 Probability(opt->dual)};
  if (!verify_hedge(cone, claim, h)) {
    throw InternalError("hedge certificates failed re-verification");
  }
  return h;
}

bool verify_hedge(const ConeSpec& cone, const PayoffFn& claim, const HedgeOptimum& h) {
  if (h.lambda.size() != cone.num_generators()) return false;
  if (h.value != h.alpha) return false;
  for (const auto& l : h.lambda) {
    if (l < 0) return false;
  }
  PayoffFn k = cone.combine(h.lambda);
  for (std::size_t w = 0; w < k.size(); ++w) {
    if (h.alpha + k[w] < claim[w]) return false;
  }
  if (!verify_separating(cone, Separating{h.dual})) return false;
  return h.dual.expectation(claim) == h.value;
}

SeparatingMeasures separating_measures(const ConeSpec& cone, bool enumerate) {
  const std::size_t n = cone.scenario().size();
  if (enumerate && (n > 10 || cone.num_generators() > 12)) {
    throw InputError("enumeration limited to 10 states and 12 generators");
  }
  CoherenceVerdict verdict = solve_separating(cone);
  if (auto* win = std::get_if<SureWin>(&verdict)) {
    return EmptySeparatingSet{*win};
  }
  SeparatingSet set{std::get<Separating>(verdict).m, {}};
  if (enumerate) {
    polytope::HRep rep;
    rep.dim = n;
    rep.eq.push_back(std::vector<Rational>(n, Rational(1)));
    rep.eq_rhs.push_back(Rational(1));
    for (std::size_t w = 0; w < n; ++w) {
      std::vector<Rational> row(n, Rational(0));
      row[w] = -1;
      rep.ineq.push_back(std::move(row));
      rep.ineq_rhs.push_back(Rational(0));
    }
    for (const auto& g : cone.generators()) {
      rep.ineq.push_back(g.values);
      rep.ineq_rhs.push_back(Rational(0));
    }
    for (auto& vertex : polytope::enumerate_vertices(rep)) {
      Probability m{std::move(vertex)};
      if (!verify_separating(cone, Separating{m})) {
        throw InternalError("enumerated vertex escaped M(K)");
      }
      set.vertices.push_back(std::move(m));
    }
  }
  return set;
}

ExtensionResult extend_to_probability(const PartialAssignment& assignment) {
  const std::size_t n = assignment.scenario().size();
  const auto& entries = assignment.entries();

  lp::LinearProgram prog;
  prog.sense = lp::Sense::Maximize;
  prog.objective.assign(n, Rational(0));
  prog.bounds.assign(n, lp::Bound::NonNegative);
  prog.rows.push_back({std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1)});
  for (std::size_t k = 0; k < entries.size(); ++k) {
    prog.rows.push_back({assignment.indicator(k).values, lp::Relation::Equal, entries[k].value});
  }

  lp::Result res = lp::solve(prog);
  if (auto* opt = std::get_if<lp::Optimal>(&res)) {
    Probability m(opt->primal);
    if (!verify_extension(assignment, m)) {
      throw InternalError("extension failed re-verification");
    }
    return m;
  }
  auto* inf = std::get_if<lp::Infeasible>(&res);
  if (!inf) throw InternalError("extension program cannot be unbounded");

  // Farkas rows y: y_0 + sum_k y_k 1_{F_k} >= 0 pointwise and
  // y_0 + sum_k y_k lambda_k < 0, so a = y / (-y'b) clears 1 everywhere.
  Rational ytb = inf->farkas[0];
  for (std::size_t k = 0; k < entries.size(); ++k) {
    ytb += inf->farkas[k + 1] * entries[k].value;
  }
  if (ytb >= 0) throw InternalError("Farkas aggregate lost negativity");
  ExtensionSureWin win;
  win.coefficients.resize(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    win.coefficients[k] = inf->farkas[k + 1] / -ytb;
  }
  if (!verify_extension_sure_win(assignment, win)) {
    throw InternalError("assessment sure-win certificate failed re-verification");
  }
  return win;
}

bool verify_extension(const PartialAssignment& assignment, const Probability& m) {
  if (m.size() != assignment.scenario().size()) return false;
  const auto& entries = assignment.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (m.expectation(assignment.indicator(k)) != entries[k].value) return false;
  }
  return true;
}

bool verify_extension_sure_win(const PartialAssignment& assignment,
                               const ExtensionSureWin& win) {
  const auto& entries = assignment.entries();
  if (win.coefficients.size() != entries.size()) return false;
  const std::size_t n = assignment.scenario().size();
  for (std::size_t w = 0; w < n; ++w) {
    Rational total = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      bool member = std::binary_search(entries[k].event.begin(), entries[k].event.end(), w);
      total += win.coefficients[k] * (Rational(member ? 1 : 0) - entries[k].value);
    }
    if (total < 1) return false;
  }
  return true;
}

RepresentationResult represent_functional(const FunctionalSpec& spec, bool require_positive) {
  const std::size_t n = spec.scenario().size();
  PayoffFn one = PayoffFn::constant(n, Rational(1));
  auto one_coords = spec.coordinates(one);
  if (!one_coords) throw InputError("constant 1 must lie in the span of the basis");
  Rational phi1 = 0;
  for (std::size_t i = 0; i < one_coords->size(); ++i) {
    phi1 += (*one_coords)[i] * spec.values()[i];
  }

  if (phi1 == 0) {
    for (const auto& v : spec.values()) {
      if (v != 0) return NoRepresentation{};
    }
    std::vector<Rational> dirac(n, Rational(0));
    dirac[0] = 1;
    return RepresentingCharge{std::move(dirac), true};
  }

  if (require_positive && phi1 < 0) {
    // The constant 1 itself witnesses the failure of positivity.
    return NotPositive{one, phi1};
  }

  const auto& basis = spec.basis();
  std::vector<Rational> targets(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) targets[i] = spec.values()[i] / phi1;

  if (!require_positive) {
    linalg::Matrix rows;
    std::vector<Rational> rhs;
    rows.push_back(std::vector<Rational>(n, Rational(1)));
    rhs.push_back(Rational(1));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      rows.push_back(basis[i].values);
      rhs.push_back(targets[i]);
    }
    auto m = linalg::solve(std::move(rows), std::move(rhs), n);
    if (!m) throw InternalError("well-defined functional lost its representing system");
    bool positive = std::all_of(m->begin(), m->end(), [](const Rational& v) { return v >= 0; });
    RepresentingCharge rep{std::move(*m), positive};
    if (!verify_representation(spec, rep)) {
      throw InternalError("signed representation failed re-verification");
    }
    return rep;
  }

  lp::LinearProgram prog;
  prog.sense = lp::Sense::Maximize;
  prog.objective.assign(n, Rational(0));
  prog.bounds.assign(n, lp::Bound::NonNegative);
  prog.rows.push_back({std::vector<Rational>(n, Rational(1)), lp::Relation::Equal, Rational(1)});
  for (std::size_t i = 0; i < basis.size(); ++i) {
    prog.rows.push_back({basis[i].values, lp::Relation::Equal, targets[i]});
  }
  lp::Result res = lp::solve(prog);
  if (auto* opt = std::get_if<lp::Optimal>(&res)) {
    RepresentingCharge rep{opt->primal, true};
    if (!verify_representation(spec, rep)) {
      throw InternalError("positive representation failed re-verification");
    }
    return rep;
  }
  auto* inf = std::get_if<lp::Infeasible>(&res);
  if (!inf) throw InternalError("representation program cannot be unbounded");

  // Witness f = y_0 1 + sum_i y_i h_i: pointwise >= 0 by the Farkas rows,
  // and phi(f) = phi(1) (y'b) < 0 since phi(1) > 0 here.
  PayoffFn witness = PayoffFn::constant(n, inf->farkas[0]);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    witness = witness + inf->farkas[i + 1] * basis[i];
  }
  NotPositive np{witness, spec.evaluate(witness)};
  if (!verify_not_positive(spec, np)) {
    throw InternalError("non-positivity witness failed re-verification");
  }
  return np;
}

bool verify_representation(const FunctionalSpec& spec, const RepresentingCharge& rep) {
  const std::size_t n = spec.scenario().size();
  if (rep.m.size() != n) return false;
  if (rep.positive) {
    for (const auto& v : rep.m) {
      if (v < 0) return false;
    }
  }
  Rational mass = 0;
  for (const auto& v : rep.m) mass += v;
  if (mass != 1) return false;
  PayoffFn one = PayoffFn::constant(n, Rational(1));
  Rational phi1 = spec.evaluate(one);
  for (std::size_t i = 0; i < spec.basis().size(); ++i) {
    Rational mh = 0;
    for (std::size_t w = 0; w < n; ++w) mh += rep.m[w] * spec.basis()[i][w];
    if (mh * phi1 != spec.values()[i]) return false;
  }
  return true;
}

bool verify_not_positive(const FunctionalSpec& spec, const NotPositive& np) {
  if (np.witness.size() != spec.scenario().size()) return false;
  for (std::size_t w = 0; w < np.witness.size(); ++w) {
    if (np.witness[w] < 0) return false;
  }
  auto coords = spec.coordinates(np.witness);
  if (!coords) return false;
  Rational value = 0;
  for (std::size_t i = 0; i < coords->size(); ++i) value += (*coords)[i] * spec.values()[i];
  return value == np.phi_value && value < 0;
}

}  // namespace charge
