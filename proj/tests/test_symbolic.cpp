#include <vector>

#include "doctest.h"

#include "geninv/enumeration.hpp"
#include "geninv/exceptions.hpp"
#include "geninv/inverses.hpp"
#include "geninv/symbolic.hpp"

using namespace geninv;

TEST_SUITE("symbolic") {

TEST_CASE("model A multiplication rules") {
  auto a2 = SymElement::power(2);
  auto a3 = SymElement::power(3);
  CHECK(sym_mul(SymModel::A, a2, a3) == SymElement::power(5));
  CHECK(sym_mul(SymModel::A, SymElement::e(), SymElement::power(7)) ==
        SymElement::e());
  CHECK(sym_mul(SymModel::A, SymElement::power(7), SymElement::e()) ==
        SymElement::e());
  // (ef)e = e(fe) = (ee)f = ef by the stated relations
  CHECK(sym_mul(SymModel::A, SymElement::ef(), SymElement::e()) ==
        SymElement::ef());
  CHECK(sym_mul(SymModel::A, SymElement::e(), SymElement::f()) ==
        SymElement::ef());
  CHECK(sym_mul(SymModel::A, SymElement::f(), SymElement::e()) ==
        SymElement::ef());
}

TEST_CASE("model B multiplication rules") {
  CHECK(sym_mul(SymModel::B, SymElement::e(), SymElement::f()) ==
        SymElement::e());
  CHECK(sym_mul(SymModel::B, SymElement::f(), SymElement::e()) ==
        SymElement::f());
  CHECK(sym_mul(SymModel::B, SymElement::f(), SymElement::power(1)) ==
        SymElement::f());
  CHECK_THROWS_AS(sym_mul(SymModel::B, SymElement::ef(), SymElement::e()),
                  InputError);
}

TEST_CASE("associativity over all shapes with exponents up to 5") {
  for (SymModel model : {SymModel::A, SymModel::B}) {
    auto universe = sym_universe(model, 5);
    for (const SymElement& x : universe) {
      for (const SymElement& y : universe) {
        for (const SymElement& z : universe) {
          CHECK(sym_mul(model, sym_mul(model, x, y), z) ==
                sym_mul(model, x, sym_mul(model, y, z)));
        }
      }
    }
  }
}

TEST_CASE("green preorder decisions") {
  // powers: a^m <=_L a^n iff m >= n
  CHECK(sym_leq(SymModel::A, GreenKind::L, SymElement::power(5),
                SymElement::power(2)));
  CHECK_FALSE(sym_leq(SymModel::A, GreenKind::L, SymElement::power(2),
                      SymElement::power(5)));
  // e <=_L a^n always; a^n <=_L e never
  CHECK(sym_leq(SymModel::A, GreenKind::L, SymElement::e(),
                SymElement::power(9)));
  CHECK_FALSE(sym_leq(SymModel::A, GreenKind::L, SymElement::power(9),
                      SymElement::e()));
  // model B: e L f but not e R f
  CHECK(sym_equiv(SymModel::B, GreenKind::L, SymElement::e(),
                  SymElement::f()));
  CHECK_FALSE(sym_leq(SymModel::B, GreenKind::R, SymElement::e(),
                      SymElement::f()));
}

TEST_CASE("green decisions agree with bounded multiplier scans") {
  // The case analysis is hand-proved; this samples every multiplier shape
  // with exponents up to 20 and compares.
  for (SymModel model : {SymModel::A, SymModel::B}) {
    auto sample = sym_universe(model, 6);
    auto multipliers = sym_universe(model, 20);
    for (const SymElement& x : sample) {
      for (const SymElement& y : sample) {
        bool scan_l = x == y;
        bool scan_r = x == y;
        for (const SymElement& z : multipliers) {
          scan_l = scan_l || sym_mul(model, z, y) == x;
          scan_r = scan_r || sym_mul(model, y, z) == x;
        }
        CHECK(sym_leq(model, GreenKind::L, x, y) == scan_l);
        CHECK(sym_leq(model, GreenKind::R, x, y) == scan_r);
      }
    }
  }
}

TEST_CASE("model A sigma report: two maximal inverses, no greatest") {
  SymSigmaReport report = sym_sigma(SymModel::A, 2);
  CHECK(report.members ==
        std::vector<SymElement>{SymElement::e(), SymElement::f(),
                                SymElement::ef()});
  CHECK(report.maximal ==
        std::vector<SymElement>{SymElement::e(), SymElement::f()});
  CHECK_FALSE(report.greatest.has_value());
  // a^{||e} = e and a^{||f} = f
  for (const auto& [e, b] : report.inverses) {
    CHECK(e == b);
  }
  // same structure at every level j (commutative model)
  for (int j : {0, 1}) {
    SymSigmaReport r = sym_sigma(SymModel::A, j);
    CHECK(r.members == report.members);
    CHECK(r.maximal == report.maximal);
    CHECK_FALSE(r.greatest.has_value());
  }
}

TEST_CASE("model A: Sigma_2 semilattice is ef < e, ef < f") {
  auto natural_leq = [](const SymElement& x, const SymElement& y) {
    return sym_mul(SymModel::A, x, y) == x && sym_mul(SymModel::A, y, x) == x;
  };
  CHECK(natural_leq(SymElement::ef(), SymElement::e()));
  CHECK(natural_leq(SymElement::ef(), SymElement::f()));
  CHECK_FALSE(natural_leq(SymElement::e(), SymElement::f()));
  CHECK_FALSE(natural_leq(SymElement::f(), SymElement::e()));
  CHECK_FALSE(natural_leq(SymElement::e(), SymElement::ef()));
}

TEST_CASE("model B sigma report: Sigma_1 = {e, f}, Sigma_2 empty") {
  SymSigmaReport s1 = sym_sigma(SymModel::B, 1);
  CHECK(s1.members ==
        std::vector<SymElement>{SymElement::e(), SymElement::f()});
  CHECK(s1.maximal == s1.members);
  CHECK_FALSE(s1.greatest.has_value());

  SymSigmaReport s2 = sym_sigma(SymModel::B, 2);
  CHECK(s2.members.empty());
  CHECK(s2.maximal.empty());
  CHECK_FALSE(s2.greatest.has_value());
}

TEST_CASE("no finite model: every element of a finite semigroup is naturally invertible") {
  // Model A's element a has maximal but no greatest idempotent below it;
  // a finite Cayley table can never reproduce that, which is why the
  // symbolic models exist at all.
  EnumerationConfig config;
  config.order = 3;
  long long elements = 0;
  enumerate_semigroups(config, [&](const Semigroup& s) {
    for (element_id a = 0; a < s.order(); ++a) {
      ++elements;
      CHECK(natural_inverse(s, a, 2).decomposition.has_value());
    }
  });
  CHECK(elements > 0);
}

}  // TEST_SUITE
