#ifndef GENINV_RATIONAL_HPP_
#define GENINV_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace geninv {

// Exact scalar field.  cpp_rational keeps the canonical reduced form with
// positive denominator, which is exactly the invariant the rest of the
// library relies on; no floating point anywhere on authoritative paths.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with optional whitespace; throws InputError.
Rational parse_rational(std::string_view text);

// "p/q" when the denominator is not 1, else the bare integer.
std::string format_rational(const Rational& value);

}  // namespace geninv

#endif  // GENINV_RATIONAL_HPP_
