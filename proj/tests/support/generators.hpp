#ifndef CHARGE_TESTS_SUPPORT_GENERATORS_HPP
#define CHARGE_TESTS_SUPPORT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "charge/rational.hpp"
#include "charge/scenario.hpp"

namespace charge::testing {

// Deterministic small-rational source shared by property and acceptance
// tests. Numerators in [-num_abs, num_abs], denominators in [1, den_max].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(engine_);
  }

  Rational rational(int num_abs = 9, int den_max = 9) {
    return Rational(integer(-num_abs, num_abs), integer(1, den_max));
  }

  Rational nonneg_rational(int num_max = 9, int den_max = 9) {
    return Rational(integer(0, num_max), integer(1, den_max));
  }

  std::vector<Rational> rational_vector(std::size_t n, int num_abs = 9, int den_max = 9) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = rational(num_abs, den_max);
    return v;
  }

  Scenario scenario(int min_states, int max_states) {
    int n = integer(min_states, max_states);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    return Scenario(std::move(labels));
  }

  // Random probability with rational weights: normalized positive integers.
  std::vector<Rational> probability_weights(std::size_t n) {
    std::vector<Rational> w(n);
    Rational total = 0;
    for (auto& x : w) {
      x = Rational(integer(0, 9), 1);
      total += x;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    for (auto& x : w) x /= total;
    return w;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace charge::testing

#endif
