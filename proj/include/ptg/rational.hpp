#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ptg {

/// Exact arbitrary-precision rational; all weights and thresholds use it.
using Rational = mpq_class;

/// Renders a rational exactly: a plain decimal when the denominator has only
/// factors 2 and 5 ("1525.85", "-3", "0.125"), otherwise "num/den".
std::string to_decimal_string(const Rational& q);

/// Inverse of to_decimal_string. Accepts integers, finite decimals and "a/b".
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace ptg
