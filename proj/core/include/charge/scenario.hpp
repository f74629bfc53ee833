#ifndef CHARGE_SCENARIO_HPP
#define CHARGE_SCENARIO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charge/linear_program.hpp"
#include "charge/rational.hpp"

namespace charge {

/// Finite state space with a fixed coordinate order.
class Scenario {
 public:
  explicit Scenario(std::vector<std::string> states);

  std::size_t size() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const Scenario&) const = default;

 private:
  std::vector<std::string> states_;
};

/// Real function on a finite state space, one exact value per state.
struct PayoffFn {
  std::vector<Rational> values;

  PayoffFn() = default;
  explicit PayoffFn(std::vector<Rational> v) : values(std::move(v)) {}
  static PayoffFn constant(std::size_t n, const Rational& c) {
    return PayoffFn(std::vector<Rational>(n, c));
  }

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
  Rational& operator[](std::size_t i) { return values[i]; }

  bool operator==(const PayoffFn&) const = default;
};

PayoffFn operator+(const PayoffFn& f, const PayoffFn& g);
PayoffFn operator-(const PayoffFn& f, const PayoffFn& g);
PayoffFn operator*(const Rational& c, const PayoffFn& f);
/// Pointwise f <= g.
bool dominated_by(const PayoffFn& f, const PayoffFn& g);

/// Finitely additive probability on a finite state space: nonnegative
/// weights with exact total mass 1.
class Probability {
 public:
  explicit Probability(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  Rational expectation(const PayoffFn& f) const;

  bool operator==(const Probability&) const = default;

 private:
  std::vector<Rational> weights_;
};

/// Finitely generated convex cone { sum_i lambda_i g_i : lambda >= 0 } of
/// payoff functions. No generators means the trivial cone {0}.
class ConeSpec {
 public:
  ConeSpec(Scenario scenario, std::vector<PayoffFn> generators);

  const Scenario& scenario() const { return scenario_; }
  const std::vector<PayoffFn>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }

  /// The cone element sum_i coefficients_i g_i.
  PayoffFn combine(const std::vector<Rational>& coefficients) const;

 private:
  Scenario scenario_;
  std::vector<PayoffFn> generators_;
};

/// Price assessment on finitely many events: entries (F, lambda(F)).
class PartialAssignment {
 public:
  struct Entry {
    std::vector<std::size_t> event;  // state indices, strictly increasing
    Rational value;
  };

  PartialAssignment(Scenario scenario, std::vector<Entry> entries);

  const Scenario& scenario() const { return scenario_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Indicator payoff of entry k's event.
  PayoffFn indicator(std::size_t k) const;

 private:
  Scenario scenario_;
  std::vector<Entry> entries_;
};

/// A linear functional given by values on a finite spanning family.
/// Construction rejects ill-defined data: every rational linear dependency
/// among the basis functions must be matched by the assigned values.
class FunctionalSpec {
 public:
  FunctionalSpec(Scenario scenario, std::vector<PayoffFn> basis, std::vector<Rational> values);

  const Scenario& scenario() const { return scenario_; }
  const std::vector<PayoffFn>& basis() const { return basis_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Coefficients expressing f in the basis, if f lies in the span.
  std::optional<std::vector<Rational>> coordinates(const PayoffFn& f) const;
  /// phi(f) for f in the span; throws InputError otherwise.
  Rational evaluate(const PayoffFn& f) const;

 private:
  Scenario scenario_;
  std::vector<PayoffFn> basis_;
  std::vector<Rational> values_;
};

}  // namespace charge

#endif
