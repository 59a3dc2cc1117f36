#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace teich {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Accepts "p", "-p", "p/q". Throws Error(parse) otherwise or on q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are printed without a denominator.
std::string to_string(const Rational& value);

}  // namespace teich
