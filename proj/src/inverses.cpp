#include "geninv/inverses.hpp"

#include <algorithm>

#include "geninv/exceptions.hpp"

namespace geninv {

bool all_pass(const std::vector<Certificate>& certs) {
  return std::all_of(certs.begin(), certs.end(),
                     [](const Certificate& c) { return c.pass; });
}

std::vector<element_id> associates(const Semigroup& s, element_id a) {
  std::vector<element_id> out;
  for (element_id x = 0; x < s.order(); ++x) {
    if (s.product(s.product(a, x), a) == a) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<element_id> weak_inverses(const Semigroup& s, element_id a) {
  std::vector<element_id> out;
  for (element_id x = 0; x < s.order(); ++x) {
    if (s.product(s.product(x, a), x) == x) {
      out.push_back(x);
    }
  }
  return out;
}

InverseReport group_inverse(const Semigroup& s, element_id a) {
  InverseReport report;
  bool h_condition = s.equiv(GreenKind::H, a, s.product(a, a));

  std::vector<element_id> found;
  for (element_id x = 0; x < s.order(); ++x) {
    if (s.product(a, x) == s.product(x, a) &&
        s.product(s.product(x, a), x) == x &&
        s.product(s.product(a, x), a) == a) {
      found.push_back(x);
    }
  }
  if (h_condition != !found.empty()) {
    throw EquivalenceMismatch("group inverse: a H a^2 disagrees with scan");
  }
  report.exists = h_condition;
  report.certificates.push_back({"a H a^2", h_condition});
  if (report.exists) {
    if (found.size() != 1) {
      throw EquivalenceMismatch("group inverse not unique");
    }
    element_id x = found.front();
    report.witness = x;
    report.certificates.push_back({"xa = ax", s.product(x, a) == s.product(a, x)});
    report.certificates.push_back({"xax = x", s.product(s.product(x, a), x) == x});
    report.certificates.push_back({"axa = a", s.product(s.product(a, x), a) == a});
  }
  return report;
}

InverseReport inverse_along(const Semigroup& s, element_id a, element_id d) {
  InverseReport report;
  element_id ad = s.product(a, d);
  element_id da = s.product(d, a);
  element_id dad = s.product(d, ad);

  // Candidates for the defining characterization: bab = b and b H d.
  std::vector<element_id> candidates;
  for (element_id b = 0; b < s.order(); ++b) {
    if (s.product(s.product(b, a), b) == b && s.equiv(GreenKind::H, b, d)) {
      candidates.push_back(b);
    }
  }

  InverseReport da_sharp = group_inverse(s, da);
  InverseReport ad_sharp = group_inverse(s, ad);

  bool c1 = !candidates.empty();
  bool c2 = s.leq(GreenKind::R, d, da) && da_sharp.exists;
  bool c3 = s.leq(GreenKind::L, d, ad) && ad_sharp.exists;
  bool c4 = s.equiv(GreenKind::H, dad, d);
  bool c5 = s.leq(GreenKind::H, d, dad);

  if (c1 != c2 || c1 != c3 || c1 != c4 || c1 != c5) {
    throw EquivalenceMismatch(
        "inverse along: five-way existence criteria disagree (a="
        + std::to_string(a) + ", d=" + std::to_string(d) + ")");
  }

  report.certificates.push_back({"exists: bab=b, b H d", c1});
  report.certificates.push_back({"exists: d leq_R da and (da)# exists", c2});
  report.certificates.push_back({"exists: d leq_L ad and (ad)# exists", c3});
  report.certificates.push_back({"exists: dad H d", c4});
  report.certificates.push_back({"exists: d leq_H dad", c5});
  report.exists = c1;
  if (!report.exists) {
    return report;
  }

  if (candidates.size() != 1) {
    throw EquivalenceMismatch("inverse along d is not unique");
  }
  element_id b = candidates.front();
  element_id from_ad = s.product(d, *ad_sharp.witness);
  element_id from_da = s.product(*da_sharp.witness, d);

  report.witness = b;
  report.certificates.push_back({"b = d(ad)#", b == from_ad});
  report.certificates.push_back({"b = (da)#d", b == from_da});
  report.certificates.push_back({"bad = d", s.product(s.product(b, a), d) == d});
  report.certificates.push_back({"dab = d", s.product(s.product(d, a), b) == d});
  report.certificates.push_back({"b leq_H d", s.leq(GreenKind::H, b, d)});
  report.certificates.push_back({"unique", candidates.size() == 1});
  if (!all_pass(report.certificates)) {
    throw EquivalenceMismatch("inverse along: certificates failed");
  }
  return report;
}

namespace {

// Maximal elements and (if present) greatest element of `members` under the
// natural partial order.  The greatest element is only reported when the
// maximal set is a singleton that dominates every member.
void order_structure(const Semigroup& s, SigmaSet& sigma_set) {
  const auto& members = sigma_set.members;
  for (element_id e : members) {
    bool maximal = true;
    for (element_id f : members) {
      if (f != e && s.natural_leq(e, f)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      sigma_set.maximal.push_back(e);
    }
  }
  if (sigma_set.maximal.size() == 1) {
    element_id m = sigma_set.maximal.front();
    bool dominates = std::all_of(
        members.begin(), members.end(),
        [&](element_id e) { return s.natural_leq(e, m); });
    if (dominates) {
      sigma_set.greatest = m;
    }
  }
}

}  // namespace

SigmaSet sigma(const Semigroup& s, element_id a, int j) {
  if (j < 0 || j > 2) {
    throw InputError("sigma level j must be 0, 1 or 2");
  }
  SigmaSet out;
  out.j = j;

  std::vector<element_id> universe;
  if (j == 0) {
    for (element_id x = 0; x < s.order(); ++x) {
      universe.push_back(x);
    }
  } else if (j == 1) {
    universe = s.commutant({a});
  } else {
    universe = s.bicommutant({a});
  }

  for (element_id e : universe) {
    if (!s.is_idempotent(e)) {
      continue;
    }
    element_id eae = s.product(s.product(e, a), e);
    if (s.equiv(GreenKind::H, eae, e)) {
      out.members.push_back(e);
    }
  }
  order_structure(s, out);
  return out;
}

SigmaLemmasReport check_sigma_lemmas(const Semigroup& s, element_id a) {
  SigmaLemmasReport report;
  SigmaSet sigma0 = sigma(s, a, 0);
  SigmaSet sigma2 = sigma(s, a, 2);
  auto in_sigma0 = [&](element_id e) {
    return std::binary_search(sigma0.members.begin(), sigma0.members.end(), e);
  };

  // (i) commuting idempotents: e in Sigma_0(a) iff e <=_H a.
  for (element_id e : s.idempotents()) {
    if (s.product(a, e) != s.product(e, a)) {
      continue;
    }
    ++report.cases;
    if (in_sigma0(e) != s.leq(GreenKind::H, e, a)) {
      report.failures.push_back("commuting idempotent " + std::to_string(e)
                                + ": Sigma_0 membership != e leq_H a");
    }
  }

  // (ii) Sigma_2(a) is a commutative band.
  for (element_id e : sigma2.members) {
    for (element_id f : sigma2.members) {
      ++report.cases;
      element_id ef = s.product(e, f);
      if (ef != s.product(f, e)) {
        report.failures.push_back("Sigma_2 not commutative at ("
                                  + std::to_string(e) + ", "
                                  + std::to_string(f) + ")");
      }
      if (!s.is_idempotent(ef)) {
        report.failures.push_back("Sigma_2 product not idempotent at ("
                                  + std::to_string(e) + ", "
                                  + std::to_string(f) + ")");
      }
      if (!std::binary_search(sigma2.members.begin(), sigma2.members.end(),
                              ef)) {
        report.failures.push_back("Sigma_2 not closed at (" + std::to_string(e)
                                  + ", " + std::to_string(f) + ")");
      }
    }
  }

  // (iii) corner criterion: e in Sigma_0(a) iff eae invertible in eSe,
  // and then a^{||e} is the corner inverse.
  for (element_id e : s.idempotents()) {
    ++report.cases;
    CornerMonoid corner = s.corner_monoid(e);
    element_id eae = s.product(s.product(e, a), e);
    std::vector<element_id> corner_inverses;
    for (element_id x : corner.elements) {
      if (s.product(x, eae) == e && s.product(eae, x) == e) {
        corner_inverses.push_back(x);
      }
    }
    bool corner_invertible = !corner_inverses.empty();
    if (corner_invertible != in_sigma0(e)) {
      report.failures.push_back("corner criterion mismatch at idempotent "
                                + std::to_string(e));
      continue;
    }
    if (corner_invertible) {
      InverseReport along = inverse_along(s, a, e);
      if (!along.exists || corner_inverses.size() != 1 ||
          *along.witness != corner_inverses.front()) {
        report.failures.push_back("a^{||e} differs from corner inverse at e="
                                  + std::to_string(e));
      }
    }
  }
  return report;
}

std::vector<TauPair> tau(const Semigroup& s, element_id a, int j) {
  if (j != 1 && j != 2) {
    throw InputError("tau is defined for j = 1 or 2");
  }
  std::vector<element_id> universe =
      j == 1 ? s.commutant({a}) : s.bicommutant({a});
  std::vector<TauPair> pairs;
  for (element_id b : universe) {
    if (s.product(s.product(b, a), b) == b) {
      pairs.push_back({b, s.product(a, b)});
    }
  }

  SigmaSet target = sigma(s, a, j);
  auto in_target = [&](element_id e) {
    return std::binary_search(target.members.begin(), target.members.end(), e);
  };

  std::vector<element_id> images;
  for (const TauPair& p : pairs) {
    if (!in_target(p.idempotent)) {
      throw BijectionFailure("tau image " + std::to_string(p.idempotent)
                             + " of " + std::to_string(p.weak_inverse)
                             + " is outside Sigma_" + std::to_string(j));
    }
    images.push_back(p.idempotent);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    throw BijectionFailure("tau is not injective on W(a) for a="
                           + std::to_string(a));
  }
  if (images != target.members) {
    throw BijectionFailure("tau is not onto Sigma_" + std::to_string(j)
                           + " for a=" + std::to_string(a));
  }
  for (const TauPair& p : pairs) {
    InverseReport along = inverse_along(s, a, p.idempotent);
    if (!along.exists || *along.witness != p.weak_inverse) {
      throw BijectionFailure("tau reciprocal e -> a^{||e} failed at e="
                             + std::to_string(p.idempotent));
    }
  }
  return pairs;
}

NaturalInverseResult natural_inverse(const Semigroup& s, element_id a, int j) {
  NaturalInverseResult result;
  result.j = j;
  result.sigma = sigma(s, a, j);
  if (!result.sigma.greatest) {
    return result;
  }
  element_id m = *result.sigma.greatest;
  InverseReport along = inverse_along(s, a, m);
  if (!along.exists) {
    throw EquivalenceMismatch("greatest element of Sigma_j not invertible along");
  }
  CoreDecomposition decomp;
  decomp.greatest = m;
  decomp.inverse = *along.witness;
  decomp.core = s.product(a, m);
  element_id b = decomp.inverse;
  decomp.certificates.push_back({"core = aM", decomp.core == s.product(a, m)});
  decomp.certificates.push_back(
      {"bab = b", s.product(s.product(b, a), b) == b});
  decomp.certificates.push_back({"b H M", s.equiv(GreenKind::H, b, m)});
  // aM = aba needs M to commute with a, which holds for j >= 1 (tau theorem)
  // but is not guaranteed at j = 0.
  bool core_is_aba = decomp.core == s.product(s.product(a, b), a);
  if (j >= 1) {
    decomp.certificates.push_back({"core = aba", core_is_aba});
    decomp.certificates.push_back(
        {"ab = M", s.product(a, b) == m});
    decomp.certificates.push_back(
        {"ba = M", s.product(b, a) == m});
  }
  if (!all_pass(decomp.certificates)) {
    throw EquivalenceMismatch("natural inverse certificates failed");
  }
  result.decomposition = std::move(decomp);
  return result;
}

DrazinResult drazin(const Semigroup& s, element_id a) {
  // The monogenic subsemigroup of a finite semigroup has index <= |S|, so
  // some power of a lies in a group and the search below always terminates.
  for (int n = 1; n <= s.order() + 1; ++n) {
    element_id an = s.power(a, n);
    element_id an1 = s.power(a, n + 1);
    if (!s.equiv(GreenKind::H, an, an1)) {
      continue;
    }
    std::vector<element_id> found;
    for (element_id x = 0; x < s.order(); ++x) {
      if (s.product(x, a) == s.product(a, x) &&
          s.product(s.product(x, a), x) == x &&
          s.product(x, an1) == an) {
        found.push_back(x);
      }
    }
    if (found.size() != 1) {
      throw EquivalenceMismatch("Drazin inverse not unique at index "
                                + std::to_string(n));
    }
    DrazinResult result;
    result.index = n;
    result.inverse = found.front();
    element_id x = result.inverse;
    result.certificates.push_back({"xa = ax", s.product(x, a) == s.product(a, x)});
    result.certificates.push_back(
        {"xax = x", s.product(s.product(x, a), x) == x});
    result.certificates.push_back({"x a^{n+1} = a^n", s.product(x, an1) == an});

    NaturalInverseResult nat = natural_inverse(s, a, 2);
    bool nat_matches = nat.decomposition &&
                       nat.decomposition->inverse == x &&
                       nat.decomposition->greatest == s.product(a, x);
    result.certificates.push_back({"a^D = 2-natural inverse", nat_matches});
    result.certificates.push_back(
        {"aa^D = M", nat.decomposition &&
                         s.product(a, x) == nat.decomposition->greatest});
    if (!all_pass(result.certificates)) {
      throw EquivalenceMismatch("Drazin certificates failed");
    }
    return result;
  }
  throw EquivalenceMismatch("no Drazin index found in a finite semigroup");
}

}  // namespace geninv
