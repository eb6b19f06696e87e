#ifndef GENINV_SYMBOLIC_HPP_
#define GENINV_SYMBOLIC_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geninv/semigroup.hpp"

namespace geninv {

// The two presented semigroups on generators e, f, a with
//   e = e^2 = ea = ae,  f = f^2 = fa = af,
// and either ef = fe (model A) or ef = e, fe = f (model B).  Both are
// infinite (all powers of a are distinct), so no Cayley table exists;
// elements are kept in canonical form and multiplied by the rewrite rules.
enum class SymModel { A, B };

class SymElement {
 public:
  enum class Kind { Power, E, F, EF };

  static SymElement power(long n);  // a^n, n >= 1
  static SymElement e() { return SymElement(Kind::E, 0); }
  static SymElement f() { return SymElement(Kind::F, 0); }
  static SymElement ef() { return SymElement(Kind::EF, 0); }  // model A only

  Kind kind() const { return kind_; }
  long exponent() const { return exponent_; }

  std::string str() const;

  friend auto operator<=>(const SymElement&, const SymElement&) = default;

 private:
  SymElement(Kind k, long n) : kind_(k), exponent_(n) {}
  Kind kind_;
  long exponent_;
};

// Canonical-form product; EF is rejected in model B (collapses to E or F
// there, so it is not a distinct element).
SymElement sym_mul(SymModel model, const SymElement& x, const SymElement& y);

// Exact Green-preorder decision by case analysis over element shapes.
bool sym_leq(SymModel model, GreenKind kind, const SymElement& x,
             const SymElement& y);

bool sym_equiv(SymModel model, GreenKind kind, const SymElement& x,
               const SymElement& y);

// All elements of the model, idempotents and a-powers up to max_exponent.
std::vector<SymElement> sym_universe(SymModel model, long max_exponent);

struct SymSigmaReport {
  SymModel model = SymModel::A;
  int j = 0;
  std::vector<SymElement> members;
  std::vector<SymElement> maximal;
  std::optional<SymElement> greatest;
  // (e, a^{||e}) for each member, certified by the defining identities.
  std::vector<std::pair<SymElement, SymElement>> inverses;
};

// Sigma_j of the generator a = a^1 in the given model.
SymSigmaReport sym_sigma(SymModel model, int j);

}  // namespace geninv

#endif  // GENINV_SYMBOLIC_HPP_
