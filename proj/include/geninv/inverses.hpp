#ifndef GENINV_INVERSES_HPP_
#define GENINV_INVERSES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geninv/semigroup.hpp"

namespace geninv {

struct Certificate {
  std::string name;
  bool pass = false;
};

bool all_pass(const std::vector<Certificate>& certs);

// Result of one inverse query.  When exists is true every certificate passes.
struct InverseReport {
  bool exists = false;
  std::optional<element_id> witness;
  std::vector<Certificate> certificates;
};

// Sigma_0(a) = {e in E(S) : eae H e}; Sigma_1 intersects the commutant of a,
// Sigma_2 the bicommutant.  maximal/greatest refer to the natural partial
// order on idempotents.
struct SigmaSet {
  int j = 0;
  std::vector<element_id> members;  // sorted
  std::vector<element_id> maximal;  // sorted
  std::optional<element_id> greatest;
};

struct CoreDecomposition {
  element_id greatest;  // M
  element_id inverse;   // a^{||M}
  element_id core;      // aM
  std::vector<Certificate> certificates;
};

struct NaturalInverseResult {
  int j = 0;
  SigmaSet sigma;  // carries the maximal elements when no greatest exists
  std::optional<CoreDecomposition> decomposition;
};

struct DrazinResult {
  int index = 0;
  element_id inverse = 0;
  std::vector<Certificate> certificates;
};

struct TauPair {
  element_id weak_inverse;  // b in W(a) cap {a}' (or {a}'')
  element_id idempotent;    // e = ab
};

struct SigmaLemmasReport {
  long long cases = 0;
  std::vector<std::string> failures;  // empty means every law held
  bool pass() const { return failures.empty(); }
};

// All x with axa = a.  Empty exactly when a is not regular.
std::vector<element_id> associates(const Semigroup& s, element_id a);

// All x with xax = x (outer inverses).
std::vector<element_id> weak_inverses(const Semigroup& s, element_id a);

// The commuting reflexive inverse; exists iff a H a^2.
InverseReport group_inverse(const Semigroup& s, element_id a);

// Inverse of a along d.  Evaluates the five equivalent existence criteria
// independently and throws EquivalenceMismatch if they ever disagree; on
// existence the witness is certified against both closed forms d(ad)# and
// (da)#d, the defining identities, and a uniqueness scan.
InverseReport inverse_along(const Semigroup& s, element_id a, element_id d);

SigmaSet sigma(const Semigroup& s, element_id a, int j);

// Checks, over the whole semigroup: (i) for commuting idempotents e,
// e in Sigma_0(a) iff e <=_H a; (ii) Sigma_2(a) is a commutative band;
// (iii) e in Sigma_0(a) iff eae is invertible in the corner monoid eSe,
// with a^{||e} equal to the corner inverse.
SigmaLemmasReport check_sigma_lemmas(const Semigroup& s, element_id a);

// Enumerates W(a) cap {a}' (j = 1) or W(a) cap {a}'' (j = 2) and pairs each
// b with e = ab.  Verifies the map is a bijection onto Sigma_j(a) whose
// inverse is e -> a^{||e}; throws BijectionFailure otherwise.
std::vector<TauPair> tau(const Semigroup& s, element_id a, int j);

// Natural inverse at level j: when Sigma_j(a) has a greatest element M the
// decomposition (M, a^{||M}, aM) is returned; otherwise only the maximal
// elements are reported through the sigma field.
NaturalInverseResult natural_inverse(const Semigroup& s, element_id a, int j);

// Smallest n >= 1 with a^n H a^{n+1}, plus the unique x satisfying Drazin's
// equations at that index; cross-checked against natural_inverse(s, a, 2).
DrazinResult drazin(const Semigroup& s, element_id a);

}  // namespace geninv

#endif  // GENINV_INVERSES_HPP_
