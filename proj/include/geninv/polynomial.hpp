#ifndef GENINV_POLYNOMIAL_HPP_
#define GENINV_POLYNOMIAL_HPP_

#include <utility>
#include <vector>

#include "geninv/matrix.hpp"
#include "geninv/rational.hpp"

namespace geninv {

// Dense univariate polynomial over the rationals, ascending coefficients,
// normalized (no trailing zeros; the zero polynomial is the empty vector).
using Poly = std::vector<Rational>;

namespace polyq {

Poly normalize(Poly p);
int degree(const Poly& p);  // -1 for the zero polynomial
bool is_zero(const Poly& p);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Rational& c, const Poly& a);

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Monic gcd.
Poly gcd(Poly a, Poly b);

// Returns (g, u, v) with u*a + v*b = g, g the monic gcd.
struct ExtGcd {
  Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Rational eval(const Poly& p, const Rational& x);
RationalMatrix eval(const Poly& p, const RationalMatrix& a);

// (t - root)^k divides p maximally; returns k and the cofactor.
std::pair<int, Poly> root_multiplicity(const Poly& p, const Rational& root);

}  // namespace polyq

// Characteristic polynomial of a square matrix (monic, ascending
// coefficients), computed by the Faddeev-LeVerrier recursion.
Poly characteristic_polynomial(const RationalMatrix& a);

}  // namespace geninv

#endif  // GENINV_POLYNOMIAL_HPP_
