#ifndef CHARGE_COHERENCE_HPP
#define CHARGE_COHERENCE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "charge/scenario.hpp"

namespace charge {

/// Nonnegative generator coefficients whose combination dominates the
/// constant 1 pointwise.
struct SureWin {
  std::vector<Rational> coefficients;
};

/// A probability with m(g) <= 0 for every generator.
struct Separating {
  Probability m;
};

/// Exactly one of the two holds for any finitely generated cone; each
/// excludes the other by weak duality.
using CoherenceVerdict = std::variant<SureWin, Separating>;

/// Decides whether the cone contains a sure win, returning either the
/// dominating combination or a separating probability. The certificate is
/// re-verified exactly before return.
CoherenceVerdict detect_sure_win(const ConeSpec& cone);

bool verify_sure_win(const ConeSpec& cone, const SureWin& win);
bool verify_separating(const ConeSpec& cone, const Separating& sep);

/// Least constant alpha with alpha + k >= f for some cone element k,
/// together with the attaining primal pair and the separating probability
/// that prices f at the same value.
struct HedgeOptimum {
  Rational value;
  Rational alpha;
  std::vector<Rational> lambda;
  Probability dual;
};
/// The cone admits a sure win, so every superhedging price is -infinity.
struct MinusInfinity {};

using HedgePrice = std::variant<HedgeOptimum, MinusInfinity>;

HedgePrice superhedge_price(const ConeSpec& cone, const PayoffFn& claim);

bool verify_hedge(const ConeSpec& cone, const PayoffFn& claim, const HedgeOptimum& h);

/// The separating set M(K): sample point (a vertex picked by the
/// deterministic simplex) and, on request, the full exact vertex set.
struct SeparatingSet {
  Probability sample;
  std::vector<Probability> vertices;  // filled only when enumerate was set
};
struct EmptySeparatingSet {
  SureWin certificate;
};
using SeparatingMeasures = std::variant<SeparatingSet, EmptySeparatingSet>;

/// Enumeration limits: at most 10 states and 12 generators.
SeparatingMeasures separating_measures(const ConeSpec& cone, bool enumerate);

/// Extends a partial assessment to a full probability, or produces signed
/// bet coefficients a with sum a_k (1_{F_k} - lambda(F_k)) >= 1 pointwise.
struct ExtensionSureWin {
  std::vector<Rational> coefficients;  // signed, one per entry
};
using ExtensionResult = std::variant<Probability, ExtensionSureWin>;

ExtensionResult extend_to_probability(const PartialAssignment& assignment);

bool verify_extension(const PartialAssignment& assignment, const Probability& m);
bool verify_extension_sure_win(const PartialAssignment& assignment,
                               const ExtensionSureWin& win);

/// Charge m with phi(f) = phi(1) m(f) on the span. Signed unless
/// positivity was requested.
struct RepresentingCharge {
  std::vector<Rational> m;
  bool positive;
};
/// Witness that phi is not positive: f >= 0 in the span with phi(f) < 0.
struct NotPositive {
  PayoffFn witness;
  Rational phi_value;
};
/// phi(1) = 0 with phi not identically zero: no representing measure.
struct NoRepresentation {};

using RepresentationResult = std::variant<RepresentingCharge, NotPositive, NoRepresentation>;

/// Requires the constant 1 in the span of the basis.
RepresentationResult represent_functional(const FunctionalSpec& spec, bool require_positive);

bool verify_representation(const FunctionalSpec& spec, const RepresentingCharge& rep);
bool verify_not_positive(const FunctionalSpec& spec, const NotPositive& np);

}  // namespace charge

#endif
