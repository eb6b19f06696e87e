#include "geninv/polynomial.hpp"

#include "geninv/exceptions.hpp"

namespace geninv {
namespace polyq {

Poly normalize(Poly p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
  return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return normalize(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  return normalize(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return normalize(std::move(out));
}

Poly scale(const Rational& c, const Poly& a) {
  Poly out = a;
  for (Rational& x : out) {
    x *= c;
  }
  return normalize(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (is_zero(b)) {
    throw InputError("polynomial division by zero");
  }
  Poly rem = a;
  Poly quot;
  int db = degree(b);
  while (degree(rem) >= db) {
    int shift = degree(rem) - db;
    Rational coeff = rem.back() / b.back();
    if (static_cast<int>(quot.size()) < shift + 1) {
      quot.resize(shift + 1);
    }
    quot[shift] += coeff;
    for (int i = 0; i <= db; ++i) {
      rem[shift + i] -= coeff * b[i];
    }
    rem = normalize(std::move(rem));
  }
  return {normalize(std::move(quot)), std::move(rem)};
}

Poly gcd(Poly a, Poly b) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!is_zero(b)) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!is_zero(a)) {
    a = scale(Rational(1) / a.back(), a);
  }
  return a;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = normalize(a), r1 = normalize(b);
  Poly u0{Rational(1)}, u1{};
  Poly v0{}, v1{Rational(1)};
  while (!is_zero(r1)) {
    auto [q, r] = divmod(r0, r1);
    Poly u2 = sub(u0, mul(q, u1));
    Poly v2 = sub(v0, mul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  ExtGcd out;
  if (!is_zero(r0)) {
    Rational lead = r0.back();
    out.g = scale(Rational(1) / lead, r0);
    out.u = scale(Rational(1) / lead, u0);
    out.v = scale(Rational(1) / lead, v0);
  }
  return out;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalMatrix eval(const Poly& p, const RationalMatrix& a) {
  if (!a.is_square()) {
    throw InputError("polynomial evaluation requires a square matrix");
  }
  RationalMatrix acc = RationalMatrix::zero(a.rows(), a.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * a;
    for (int i = 0; i < a.rows(); ++i) {
      acc.at(i, i) += *it;
    }
  }
  return acc;
}

std::pair<int, Poly> root_multiplicity(const Poly& p, const Rational& root) {
  Poly linear{-root, Rational(1)};
  Poly current = normalize(p);
  int mult = 0;
  while (!is_zero(current)) {
    auto [q, r] = divmod(current, linear);
    if (!is_zero(r)) {
      break;
    }
    ++mult;
    current = std::move(q);
  }
  return {mult, current};
}

}  // namespace polyq

Poly characteristic_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) {
    throw InputError("characteristic polynomial requires a square matrix");
  }
  int n = a.rows();
  // Faddeev-LeVerrier: c_n = 1, M_1 = I, then
  //   c_{n-k} = -tr(A M_k)/k,  M_{k+1} = A M_k + c_{n-k} I.
  Poly coeffs(n + 1);
  coeffs[n] = 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    RationalMatrix am = a * m;
    Rational c = -am.trace() / k;
    coeffs[n - k] = c;
    if (k < n) {
      m = am;
      for (int i = 0; i < n; ++i) {
        m.at(i, i) += c;
      }
    }
  }
  return coeffs;
}

}  // namespace geninv
