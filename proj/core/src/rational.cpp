#include "charge/rational.hpp"

#include <cctype>
#include <sstream>

namespace charge {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) return std::nullopt;
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num)) return std::nullopt;
  Integer p{std::string(num)};
  if (negative) p = -p;
  if (den.empty()) return Rational(p);
  if (!all_digits(den)) return std::nullopt;
  Integer q{std::string(den)};
  if (q == 0) return std::nullopt;
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) {
    out << '/' << denominator(value);
  }
  return out.str();
}

std::string format_vector(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace charge
