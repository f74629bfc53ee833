#ifndef CHARGE_RATIONAL_HPP
#define CHARGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charge {

/// Exact arbitrary-precision rational scalar. Canonical form (reduced,
/// positive denominator) is maintained by the backend on every operation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p", "-p" or "p/q" with q > 0 after reduction. No whitespace,
/// no leading '+', no empty numerator. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q" reduced.
std::string format_rational(const Rational& value);

std::string format_vector(const std::vector<Rational>& values);

}  // namespace charge

#endif
