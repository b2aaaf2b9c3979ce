#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "pcsp/errors.hpp"

namespace pcsp {

/// Exact arbitrary-precision rational. Every numeric quantity in the
/// toolkit (weights, thresholds, probabilities, LP entries) is one of
/// these; there is no floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" or a plain integer string. Rejects zero denominators and
/// anything that is not a reduced-or-not fraction of two integers.
Rational parse_rational(const std::string& text);

/// Canonical form: "p/q" with q > 0, or just "p" when q == 1.
std::string rational_to_string(const Rational& value);

inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

/// Sum of |x| over a weight vector.
Rational abs_sum(const std::vector<Rational>& values);

/// Largest |x| over a weight vector; 0 for an empty vector.
Rational max_abs(const std::vector<Rational>& values);

} // namespace pcsp
