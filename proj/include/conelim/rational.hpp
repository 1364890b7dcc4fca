#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace conelim {

// Arbitrary-precision rational with canonical form (positive denominator,
// coprime numerator/denominator, zero stored as 0/1). cpp_rational keeps
// exactly these invariants.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p", "-p" or "p/q"; q must be positive after normalization.
Rational parse_rational(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

}  // namespace conelim
