#include "pcsp/rational.hpp"

#include <cctype>

namespace pcsp {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty())
    return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size())
    return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_literal(text))
      throw SchemaError("invalid rational literal: '" + text + "'");
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw SchemaError("invalid rational literal: '" + text + "'");
  Integer d(den);
  if (d == 0)
    throw SchemaError("zero denominator in rational: '" + text + "'");
  // The two-argument constructor canonicalizes (reduces and normalizes sign).
  return Rational(Integer(num), d);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1)
    return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational abs_sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values)
    total += rational_abs(v);
  return total;
}

Rational max_abs(const std::vector<Rational>& values) {
  Rational best = 0;
  for (const auto& v : values) {
    Rational a = rational_abs(v);
    if (a > best)
      best = a;
  }
  return best;
}

} // namespace pcsp
