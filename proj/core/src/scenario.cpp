#include "charge/scenario.hpp"

#include <algorithm>
#include <unordered_set>

#include "charge/linalg.hpp"

namespace charge {

Scenario::Scenario(std::vector<std::string> states) : states_(std::move(states)) {
  if (states_.empty()) throw InputError("scenario needs at least one state");
  std::unordered_set<std::string_view> seen;
  for (const auto& s : states_) {
    if (!seen.insert(s).second) throw InputError("duplicate state label: " + s);
  }
}

std::optional<std::size_t> Scenario::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == label) return i;
  }
  return std::nullopt;
}

PayoffFn operator+(const PayoffFn& f, const PayoffFn& g) {
  if (f.size() != g.size()) throw InputError("payoff length mismatch");
  PayoffFn out = f;
  for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  return out;
}

PayoffFn operator-(const PayoffFn& f, const PayoffFn& g) {
  if (f.size() != g.size()) throw InputError("payoff length mismatch");
  PayoffFn out = f;
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  return out;
}

PayoffFn operator*(const Rational& c, const PayoffFn& f) {
  PayoffFn out = f;
  for (auto& v : out.values) v *= c;
  return out;
}

bool dominated_by(const PayoffFn& f, const PayoffFn& g) {
  if (f.size() != g.size()) throw InputError("payoff length mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

Probability::Probability(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("probability needs at least one state");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw InputError("probability weight below zero");
    total += w;
  }
  if (total != 1) throw InputError("probability weights must sum to one");
}

Rational Probability::expectation(const PayoffFn& f) const {
  if (f.size() != weights_.size()) throw InputError("payoff/probability length mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) out += weights_[i] * f[i];
  return out;
}

ConeSpec::ConeSpec(Scenario scenario, std::vector<PayoffFn> generators)
    : scenario_(std::move(scenario)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != scenario_.size()) throw InputError("generator length mismatch");
  }
}

PayoffFn ConeSpec::combine(const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != generators_.size()) {
    throw InputError("coefficient/generator count mismatch");
  }
  PayoffFn out = PayoffFn::constant(scenario_.size(), Rational(0));
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t w = 0; w < out.size(); ++w) {
      out[w] += coefficients[i] * generators_[i][w];
    }
  }
  return out;
}

PartialAssignment::PartialAssignment(Scenario scenario, std::vector<Entry> entries)
    : scenario_(std::move(scenario)), entries_(std::move(entries)) {
  for (auto& entry : entries_) {
    std::sort(entry.event.begin(), entry.event.end());
    for (std::size_t k = 0; k < entry.event.size(); ++k) {
      if (entry.event[k] >= scenario_.size()) throw InputError("event state out of range");
      if (k > 0 && entry.event[k] == entry.event[k - 1]) {
        throw InputError("event repeats a state");
      }
    }
  }
}

PayoffFn PartialAssignment::indicator(std::size_t k) const {
  if (k >= entries_.size()) throw InputError("entry index out of range");
  PayoffFn out = PayoffFn::constant(scenario_.size(), Rational(0));
  for (std::size_t idx : entries_[k].event) out[idx] = 1;
  return out;
}

FunctionalSpec::FunctionalSpec(Scenario scenario, std::vector<PayoffFn> basis,
                               std::vector<Rational> values)
    : scenario_(std::move(scenario)), basis_(std::move(basis)), values_(std::move(values)) {
  if (basis_.size() != values_.size()) throw InputError("basis/value count mismatch");
  if (basis_.empty()) throw InputError("functional needs at least one basis element");
  for (const auto& h : basis_) {
    if (h.size() != scenario_.size()) throw InputError("basis element length mismatch");
  }
  // Well-definedness: a vector u with h_i . u = values_i for all i exists
  // iff every dependency among the h_i is matched by the values.
  linalg::Matrix rows;
  for (const auto& h : basis_) rows.push_back(h.values);
  if (!linalg::solve(rows, values_, scenario_.size())) {
    throw InputError("functional values are inconsistent with a basis dependency");
  }
}

std::optional<std::vector<Rational>> FunctionalSpec::coordinates(const PayoffFn& f) const {
  if (f.size() != scenario_.size()) throw InputError("payoff length mismatch");
  // Solve sum_i c_i h_i = f: states give equations, coefficients unknowns.
  linalg::Matrix a(scenario_.size(), std::vector<Rational>(basis_.size()));
  for (std::size_t w = 0; w < scenario_.size(); ++w) {
    for (std::size_t i = 0; i < basis_.size(); ++i) a[w][i] = basis_[i][w];
  }
  return linalg::solve(std::move(a), f.values, basis_.size());
}

Rational FunctionalSpec::evaluate(const PayoffFn& f) const {
  auto coords = coordinates(f);
  if (!coords) throw InputError("payoff outside the functional's span");
  Rational out = 0;
  for (std::size_t i = 0; i < coords->size(); ++i) out += (*coords)[i] * values_[i];
  return out;
}

}  // namespace charge
