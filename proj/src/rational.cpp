#include "tvgrid/rational.hpp"

#include <stdexcept>

namespace tvgrid {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Integer d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  // The (num, den) constructor canonicalizes; the string constructor does not.
  return Rational(Integer(num), d);
}

std::string format_rational(const Rational& value) {
  return value.str();
}

}  // namespace tvgrid
