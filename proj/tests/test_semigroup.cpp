#include "doctest.h"

#include "geninv/exceptions.hpp"
#include "geninv/semigroup.hpp"

using namespace geninv;

namespace {

Semigroup left_zero_2() {
  // xy = x
  return Semigroup::from_cayley(2, {{0, 0}, {1, 1}});
}

Semigroup meet_semilattice_2() {
  return Semigroup::from_cayley(2, {{0, 0}, {0, 1}});
}

Semigroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return Semigroup::from_cayley(n, table);
}

// {a, a^2} with a^3 = a^2: the constant table.
Semigroup monogenic_index_2() {
  return Semigroup::from_cayley(2, {{1, 1}, {1, 1}});
}

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("cayley construction validates and detects identity") {
  Semigroup lattice = meet_semilattice_2();
  CHECK(lattice.identity() == 1);
  CHECK_FALSE(lattice.adjoined_identity());

  Semigroup lz = left_zero_2();
  CHECK_FALSE(lz.identity().has_value());

  CHECK_THROWS_AS(Semigroup::from_cayley(2, {{1, 0}, {0, 0}}),
                  AssociativityViolation);
  try {
    Semigroup::from_cayley(2, {{1, 0}, {0, 0}});
  } catch (const AssociativityViolation& e) {
    // first violating triple in scan order: (00)1 = 0 but 0(01) = 1
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.k == 1);
  }

  CHECK_THROWS_AS(Semigroup::from_cayley(2, {{0, 2}, {0, 1}}),
                  OutOfRangeEntry);
  CHECK_THROWS_AS(Semigroup::from_cayley(2, {{0, 0}}), InputError);
}

TEST_CASE("transformation closure") {
  // transposition generates C2
  Semigroup c2 = Semigroup::from_transformations(2, {{1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.identity().has_value());

  // constant map: one element
  Semigroup constant = Semigroup::from_transformations(2, {{0, 0}});
  CHECK(constant.order() == 1);

  // identity-only generator set: the trivial monoid
  Semigroup trivial = Semigroup::from_transformations(2, {{0, 1}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.identity() == 0);

  // 3-cycle plus a rank-2 map: 24 of the 27 maps on 3 points (the three
  // odd permutations are unreachable), with the identity generated as c^3.
  Semigroup t = Semigroup::from_transformations(3, {{1, 2, 0}, {0, 0, 1}});
  CHECK(t.order() == 24);
  REQUIRE(t.identity().has_value());
  CHECK(t.green_class(GreenKind::H, *t.identity()).size() == 3);

  CHECK_THROWS_AS(Semigroup::from_transformations(3, {{1, 2, 0}, {0, 0, 1}}, 10),
                  ClosureTooLarge);
  CHECK_THROWS_AS(Semigroup::from_transformations(2, {{0, 5}}), InputError);
}

TEST_CASE("adjoin identity") {
  Semigroup lz = left_zero_2();
  Semigroup monoid = adjoin_identity(lz);
  CHECK(monoid.order() == 3);
  CHECK(monoid.identity() == 2);
  CHECK(monoid.adjoined_identity());
  for (element_id i = 0; i < 2; ++i) {
    for (element_id j = 0; j < 2; ++j) {
      CHECK(monoid.product(i, j) == lz.product(i, j));
    }
  }

  // groups and monoids come back unchanged
  Semigroup c2 = cyclic_group(2);
  CHECK(adjoin_identity(c2).order() == 2);
  CHECK_FALSE(adjoin_identity(c2).adjoined_identity());
  CHECK(adjoin_identity(meet_semilattice_2()).order() == 2);
}

TEST_CASE("green preorders on the stock examples") {
  Semigroup lz = left_zero_2();
  // S^1 a = S and a S^1 = {a} in a left-zero semigroup
  for (element_id a = 0; a < 2; ++a) {
    for (element_id b = 0; b < 2; ++b) {
      CHECK(lz.leq(GreenKind::L, a, b));
      CHECK(lz.leq(GreenKind::R, a, b) == (a == b));
    }
    CHECK(lz.green_class(GreenKind::H, a) == std::vector<element_id>{a});
  }

  Semigroup c4 = cyclic_group(4);
  for (element_id a = 0; a < 4; ++a) {
    CHECK(c4.green_class(GreenKind::H, a).size() == 4);
  }

  Semigroup lattice = meet_semilattice_2();
  CHECK(lattice.leq(GreenKind::H, 0, 1));
  CHECK_FALSE(lattice.leq(GreenKind::H, 1, 0));
}

TEST_CASE("green class of identity in the degree-3 closure is its unit group") {
  Semigroup t = Semigroup::from_transformations(3, {{1, 2, 0}, {0, 0, 1}});
  auto units = t.green_class(GreenKind::H, *t.identity());
  for (element_id u : units) {
    bool invertible = false;
    for (element_id v : units) {
      invertible = invertible || (t.product(u, v) == *t.identity() &&
                                  t.product(v, u) == *t.identity());
    }
    CHECK(invertible);
  }
}

TEST_CASE("idempotent poset") {
  Semigroup c4 = cyclic_group(4);
  CHECK(c4.idempotents() == std::vector<element_id>{0});

  IdempotentPoset lattice = meet_semilattice_2().idempotent_poset();
  CHECK(lattice.elements == std::vector<element_id>{0, 1});
  CHECK(lattice.leq_ids(0, 1));
  CHECK_FALSE(lattice.leq_ids(1, 0));

  // left-zero: two incomparable idempotents (ef = e but fe = f)
  IdempotentPoset lz = left_zero_2().idempotent_poset();
  CHECK(lz.elements.size() == 2);
  CHECK_FALSE(lz.leq_ids(0, 1));
  CHECK_FALSE(lz.leq_ids(1, 0));
}

TEST_CASE("commutant") {
  Semigroup lattice = meet_semilattice_2();
  CHECK(lattice.commutant({1}) == std::vector<element_id>{0, 1});
  CHECK(lattice.commutant({0}) == std::vector<element_id>{0, 1});

  Semigroup lz = left_zero_2();
  CHECK(lz.commutant({0}) == std::vector<element_id>{0});

  // triple application stabilizes
  Semigroup t = Semigroup::from_transformations(3, {{1, 2, 0}, {0, 0, 1}});
  for (element_id a = 0; a < t.order(); ++a) {
    auto once = t.commutant({a});
    CHECK(t.commutant(t.commutant(once)) == once);
  }
}

TEST_CASE("corner monoid") {
  Semigroup lattice = meet_semilattice_2();
  CHECK(lattice.corner_monoid(1).elements ==
        std::vector<element_id>{0, 1});         // e = identity
  CHECK(lattice.corner_monoid(0).elements ==
        std::vector<element_id>{0});            // 0 absorbing

  Semigroup c4 = cyclic_group(4);
  CHECK_THROWS_AS(c4.corner_monoid(1), NotIdempotent);

  Semigroup t = Semigroup::from_transformations(3, {{1, 2, 0}, {0, 0, 1}});
  for (element_id e : t.idempotents()) {
    CornerMonoid corner = t.corner_monoid(e);
    for (element_id x : corner.elements) {
      CHECK(t.product(corner.unit, x) == x);
      CHECK(t.product(x, corner.unit) == x);
      for (element_id y : corner.elements) {
        CHECK(std::binary_search(corner.elements.begin(),
                                 corner.elements.end(), t.product(x, y)));
      }
    }
  }
}

TEST_CASE("bitset-backed Green queries agree with scans above order 64") {
  Semigroup big = Semigroup::from_transformations(3, {{1, 2, 0}, {0, 0, 1}});
  // order 24: scan path.  Build a larger closure to cross the threshold.
  Semigroup larger =
      Semigroup::from_transformations(4, {{1, 2, 3, 0}, {0, 0, 1, 2}});
  REQUIRE(larger.order() > 64);
  for (element_id a = 0; a < std::min(40, larger.order()); ++a) {
    for (element_id b = 0; b < std::min(40, larger.order()); ++b) {
      bool scan_l = a == b;
      bool scan_r = a == b;
      for (element_id x = 0; x < larger.order(); ++x) {
        scan_l = scan_l || larger.product(x, b) == a;
        scan_r = scan_r || larger.product(b, x) == a;
      }
      CHECK(larger.leq(GreenKind::L, a, b) == scan_l);
      CHECK(larger.leq(GreenKind::R, a, b) == scan_r);
    }
  }
  CHECK(big.order() == 24);
}

TEST_CASE("find_zero") {
  CHECK(find_zero(meet_semilattice_2()) == 0);
  CHECK_FALSE(find_zero(cyclic_group(3)).has_value());
  CHECK(find_zero(monogenic_index_2()) == 1);
}

}  // TEST_SUITE
