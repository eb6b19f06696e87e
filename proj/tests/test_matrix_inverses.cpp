#include "doctest.h"

#include "geninv/exceptions.hpp"
#include "geninv/matrix_inverses.hpp"

using namespace geninv;

namespace {

RationalMatrix diag(std::vector<Rational> entries) {
  return RationalMatrix::diagonal(entries);
}

}  // namespace

TEST_SUITE("matrix-inverses") {

TEST_CASE("inner inverse") {
  RationalMatrix a = RationalMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(inner_inverse(a) == *inverse(a));  // invertible: d^- = d^{-1}

  RationalMatrix zero = RationalMatrix::zero(2, 2);
  CHECK(inner_inverse(zero) == zero);

  RationalMatrix p = RationalMatrix::from_rows({{1, 0}, {0, 0}});
  CHECK(inner_inverse(p) == p);

  // d d^- d = d for a rank-1 rectangle of the factorization
  RationalMatrix d = RationalMatrix::from_rows({{1, 1}, {0, 0}});
  RationalMatrix dm = inner_inverse(d);
  CHECK(d * dm * d == d);
}

TEST_CASE("matrix Green relations") {
  RationalMatrix d = diag({1, 0});
  RationalMatrix full = RationalMatrix::identity(2);
  CHECK(matrix_leq(GreenKind::L, d, full));
  CHECK(matrix_leq(GreenKind::R, d, full));
  CHECK_FALSE(matrix_leq(GreenKind::L, full, d));
  CHECK(matrix_equiv(GreenKind::H, d, d));
}

TEST_CASE("invert along d") {
  SUBCASE("along the identity: ordinary inverse") {
    RationalMatrix a = diag({2, 3});
    MatrixInverseReport r = invert_along(a, RationalMatrix::identity(2));
    REQUIRE(r.exists);
    CHECK(*r.witness == diag({Rational(1, 2), Rational(1, 3)}));
  }

  SUBCASE("identity along an idempotent gives the idempotent") {
    RationalMatrix d = RationalMatrix::from_rows({{1, 1}, {0, 0}});
    MatrixInverseReport r = invert_along(RationalMatrix::identity(2), d);
    REQUIRE(r.exists);
    CHECK(*r.witness == d);  // 1^{||d} = d# = d
  }

  SUBCASE("nonexistence: u comes out singular") {
    RationalMatrix a = RationalMatrix::from_rows({{0, 1}, {1, 0}});
    RationalMatrix d = diag({1, 0});
    // u = da + 1 - dd^- = [[0,1],[0,1]], singular
    MatrixInverseReport r = invert_along(a, d);
    CHECK_FALSE(r.exists);
  }

  SUBCASE("singular along with existence") {
    RationalMatrix a = diag({3, 5, 0});
    RationalMatrix d = diag({1, 1, 0});
    MatrixInverseReport r = invert_along(a, d);
    REQUIRE(r.exists);
    CHECK(*r.witness == diag({Rational(1, 3), Rational(1, 5), 0}));
    CHECK(all_pass(r.certificates));
  }
}

TEST_CASE("invert along an idempotent") {
  SUBCASE("e = 1: exists iff invertible") {
    CHECK(invert_along_idempotent(diag({2, 3}), RationalMatrix::identity(2))
              .exists);
    CHECK_FALSE(
        invert_along_idempotent(diag({2, 0}), RationalMatrix::identity(2))
            .exists);
  }

  SUBCASE("e = 0: inverse is 0") {
    MatrixInverseReport r =
        invert_along_idempotent(diag({2, 3}), RationalMatrix::zero(2, 2));
    REQUIRE(r.exists);
    CHECK(r.witness->is_zero());
  }

  SUBCASE("diag(2,0) along diag(1,0): u = diag(2,1)") {
    MatrixInverseReport r = invert_along_idempotent(diag({2, 0}), diag({1, 0}));
    REQUIRE(r.exists);
    CHECK(*r.witness == diag({Rational(1, 2), 0}));
  }

  SUBCASE("rejects non-idempotents") {
    CHECK_THROWS_AS(invert_along_idempotent(diag({2, 0}), diag({2, 0})),
                    NotIdempotent);
  }
}

TEST_CASE("group inverse") {
  CHECK(*group_inverse_matrix(RationalMatrix::identity(2)) ==
        RationalMatrix::identity(2));
  CHECK_FALSE(group_inverse_matrix(jordan_block(2, Rational(0))).has_value());

  RationalMatrix idem = RationalMatrix::from_rows({{1, 1}, {0, 0}});
  CHECK(*group_inverse_matrix(idem) == idem);

  RationalMatrix a = diag({2, 0});
  CHECK(*group_inverse_matrix(a) == diag({Rational(1, 2), 0}));
}

TEST_CASE("drazin inverse") {
  SUBCASE("invertible: index 1, A^D = A^{-1}") {
    RationalMatrix a = RationalMatrix::from_rows({{2, 1}, {1, 1}});
    MatrixDrazinResult dr = drazin_matrix(a);
    CHECK(dr.index == 1);
    CHECK(dr.inverse == *inverse(a));
  }

  SUBCASE("nilpotent Jordan block: index n, A^D = 0") {
    MatrixDrazinResult dr = drazin_matrix(jordan_block(3, Rational(0)));
    CHECK(dr.index == 3);
    CHECK(dr.inverse.is_zero());
  }

  SUBCASE("diag(2,0): index 1") {
    MatrixDrazinResult dr = drazin_matrix(diag({2, 0}));
    CHECK(dr.index == 1);
    CHECK(dr.inverse == diag({Rational(1, 2), 0}));
  }

  SUBCASE("index 2 block") {
    RationalMatrix a = block_diag(diag({3}), jordan_block(2, Rational(0)));
    MatrixDrazinResult dr = drazin_matrix(a);
    CHECK(dr.index == 2);
    CHECK(dr.inverse == block_diag(diag({Rational(1, 3)}),
                                   RationalMatrix::zero(2, 2)));
  }
}

TEST_CASE("spectral idempotent") {
  CHECK(spectral_idempotent(RationalMatrix::from_rows({{2, 1}, {1, 1}}))
            .is_zero());
  CHECK(spectral_idempotent(jordan_block(2, Rational(0))).is_identity());
  CHECK(spectral_idempotent(diag({2, 0})) == diag({0, 1}));
}

TEST_CASE("commutant basis dimensions") {
  CHECK(commutant_basis(RationalMatrix::identity(2)).size() == 4);
  CHECK(commutant_basis(diag({1, 2})).size() == 2);
  CHECK(commutant_basis(jordan_block(2, Rational(0))).size() == 2);

  // every basis element actually commutes
  RationalMatrix a = RationalMatrix::from_rows({{1, 2}, {0, 3}});
  for (const RationalMatrix& b : commutant_basis(a)) {
    CHECK(a * b == b * a);
  }
}

TEST_CASE("bicommutant equals polynomials in A for a nonderogatory matrix") {
  RationalMatrix a = jordan_block(3, Rational(2));
  auto basis = bicommutant_basis(a);
  CHECK(static_cast<int>(basis.size()) == minimal_polynomial_degree(a));
  for (const RationalMatrix& b : basis) {
    CHECK(a * b == b * a);
  }
}

TEST_CASE("minimal polynomial degree") {
  CHECK(minimal_polynomial_degree(RationalMatrix::identity(3)) == 1);
  CHECK(minimal_polynomial_degree(diag({1, 2})) == 2);
  CHECK(minimal_polynomial_degree(jordan_block(3, Rational(0))) == 3);
  CHECK(minimal_polynomial_degree(diag({1, 1, 2})) == 2);
}

TEST_CASE("natural core decomposition") {
  SUBCASE("block example: invertible plus nilpotent") {
    RationalMatrix a = block_diag(diag({2, 3}), jordan_block(2, Rational(0)));
    MatrixDecompositionReport report = natural_core_decomposition_matrix(a);
    CHECK(report.x == block_diag(diag({2, 3}), RationalMatrix::zero(2, 2)));
    CHECK(report.y ==
          block_diag(RationalMatrix::zero(2, 2), jordan_block(2, Rational(0))));
    CHECK(report.greatest == diag({1, 1, 0, 0}));
    CHECK(report.nilpotency_degree == 2);
  }

  SUBCASE("invertible: x = a, y = 0, M = 1") {
    RationalMatrix a = RationalMatrix::from_rows({{2, 1}, {1, 1}});
    MatrixDecompositionReport report = natural_core_decomposition_matrix(a);
    CHECK(report.x == a);
    CHECK(report.y.is_zero());
    CHECK(report.greatest.is_identity());
  }

  SUBCASE("nilpotent: x = 0, y = a, M = 0") {
    RationalMatrix a = jordan_block(3, Rational(0));
    MatrixDecompositionReport report = natural_core_decomposition_matrix(a);
    CHECK(report.x.is_zero());
    CHECK(report.y == a);
    CHECK(report.greatest.is_zero());
  }
}

TEST_CASE("spectral cluster projections") {
  SUBCASE("diag(2,0): the polynomial t/2 picks out the invertible part") {
    auto clusters = spectral_cluster_projections(diag({2, 0}));
    REQUIRE(clusters.size() == 2);
    // cluster order: 0 first, then 2
    CHECK(clusters[0].lambda == Rational(0));
    CHECK(clusters[0].projection == diag({0, 1}));
    CHECK(clusters[1].lambda == Rational(2));
    CHECK(clusters[1].projection == diag({1, 0}));
  }

  SUBCASE("irrational spectrum stays one residual cluster") {
    // t^2 - 2 has no rational roots
    RationalMatrix a = RationalMatrix::from_rows({{0, 2}, {1, 0}});
    auto clusters = spectral_cluster_projections(a);
    REQUIRE(clusters.size() == 1);
    CHECK_FALSE(clusters[0].lambda.has_value());
    CHECK(clusters[0].projection.is_identity());
  }
}

TEST_CASE("sigma2 greatest battery") {
  SUBCASE("diag(2,0): candidates 0 and diag(1,0)") {
    Sigma2Report report = sigma2_greatest_check(diag({2, 0}));
    CHECK(report.pass);
    CHECK(report.greatest == diag({1, 0}));
    REQUIRE(report.members.size() == 2);
    CHECK(report.members[0].is_zero());
    CHECK(report.members[1] == diag({1, 0}));
  }

  SUBCASE("nilpotent: M = 0 and only the zero member") {
    Sigma2Report report = sigma2_greatest_check(jordan_block(3, Rational(0)));
    CHECK(report.pass);
    CHECK(report.greatest.is_zero());
    for (const RationalMatrix& m : report.members) {
      CHECK(m.is_zero());
    }
  }

  SUBCASE("diag(1,2,0): M dominates both eigenprojections") {
    Sigma2Report report = sigma2_greatest_check(diag({1, 2, 0}));
    CHECK(report.pass);
    CHECK(report.greatest == diag({1, 1, 0}));
    bool saw_p1 = false, saw_p2 = false;
    for (const RationalMatrix& m : report.members) {
      saw_p1 = saw_p1 || m == diag({1, 0, 0});
      saw_p2 = saw_p2 || m == diag({0, 1, 0});
    }
    CHECK(saw_p1);
    CHECK(saw_p2);
  }
}

TEST_CASE("in_sigma predicates") {
  RationalMatrix a = diag({2, 0});
  RationalMatrix m = diag({1, 0});
  CHECK(in_sigma0(a, m));
  CHECK(in_sigma1(a, m));
  CHECK(in_sigma2(a, m, commutant_basis(a)));
  CHECK_FALSE(in_sigma0(a, RationalMatrix::identity(2)));  // a singular
  CHECK_FALSE(in_sigma0(a, diag({0, 1})));  // corner hits the kernel
}

}  // TEST_SUITE
