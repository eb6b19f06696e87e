#include "doctest.h"

#include "geninv/exceptions.hpp"
#include "geninv/local_spectral.hpp"

using namespace geninv;

namespace {

RationalMatrix diag(std::vector<Rational> entries) {
  return RationalMatrix::diagonal(entries);
}

RationalMatrix unit_column(int n, int i) {
  RationalMatrix v(n, 1);
  v.at(i, 0) = 1;
  return v;
}

}  // namespace

TEST_SUITE("local-spectral") {

TEST_CASE("subspace basics") {
  Subspace full = Subspace::full(3);
  CHECK(full.dim() == 3);
  CHECK(Subspace::zero(3).dim() == 0);

  // canonical form decides equality regardless of the spanning set
  RationalMatrix spans_a = RationalMatrix::from_rows({{1, 2}, {0, 0}, {1, 2}});
  RationalMatrix spans_b = RationalMatrix::from_rows({{3, 1}, {0, 0}, {3, 1}});
  CHECK(Subspace::column_space(spans_a) == Subspace::column_space(spans_b));

  Subspace plane = Subspace::column_space(
      RationalMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
  CHECK(plane.contains(unit_column(3, 0)));
  CHECK_FALSE(plane.contains(unit_column(3, 2)));
  CHECK(plane.intersect(Subspace::column_space(
                            RationalMatrix::from_rows({{1}, {0}, {0}})))
            .dim() == 1);
  CHECK(plane.sum(Subspace::column_space(unit_column(3, 2))) ==
        Subspace::full(3));
}

TEST_CASE("hyperrange and hyperkernel") {
  RationalMatrix invertible = RationalMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(hyperrange(invertible) == Subspace::full(2));
  CHECK(hyperkernel(invertible).dim() == 0);

  RationalMatrix nil = jordan_block(3, Rational(0));
  CHECK(hyperrange(nil).dim() == 0);  // truncated shift
  CHECK(hyperkernel(nil) == Subspace::full(3));

  RationalMatrix mixed = diag({2, 0});
  CHECK(hyperrange(mixed) == Subspace::column_space(unit_column(2, 0)));
  CHECK(hyperkernel(mixed) == Subspace::column_space(unit_column(2, 1)));
}

TEST_CASE("quasinilpotent part and analytic core") {
  RationalMatrix mixed = diag({2, 0});
  QuasinilpotentPart h0 = quasinilpotent_part(mixed);
  CHECK(h0.space == hyperkernel(mixed));
  CHECK(h0.probe_ran);  // integer entries within the probe bound
  CHECK(h0.probe_max < 1.0 / 1024.0);

  CHECK(analytic_core(mixed) == hyperrange(mixed));
  CHECK(analytic_core(jordan_block(4, Rational(0))).dim() == 0);

  // entries outside the probe bound: exact result, no probe
  QuasinilpotentPart big = quasinilpotent_part(diag({100, 0}));
  CHECK_FALSE(big.probe_ran);
  CHECK(big.space == hyperkernel(diag({100, 0})));
}

TEST_CASE("fitting decomposition") {
  SUBCASE("diag(2,0)") {
    FittingDecomposition fit = fitting_decomposition(diag({2, 0}));
    CHECK(fit.h0 == Subspace::column_space(unit_column(2, 1)));
    CHECK(fit.k == Subspace::column_space(unit_column(2, 0)));
    CHECK(fit.projection == diag({1, 0}));
  }

  SUBCASE("invertible") {
    RationalMatrix a = RationalMatrix::from_rows({{2, 1}, {1, 1}});
    FittingDecomposition fit = fitting_decomposition(a);
    CHECK(fit.h0.dim() == 0);
    CHECK(fit.k == Subspace::full(2));
    CHECK(fit.projection.is_identity());
  }

  SUBCASE("nilpotent") {
    FittingDecomposition fit =
        fitting_decomposition(jordan_block(3, Rational(0)));
    CHECK(fit.h0 == Subspace::full(3));
    CHECK(fit.k.dim() == 0);
    CHECK(fit.projection.is_zero());
  }

  SUBCASE("non-diagonal mixed example") {
    // shear on the invertible part plus a nilpotent tail
    RationalMatrix t = block_diag(RationalMatrix::from_rows({{1, 1}, {0, 1}}),
                                  jordan_block(2, Rational(0)));
    FittingDecomposition fit = fitting_decomposition(t);
    CHECK(fit.h0.dim() == 2);
    CHECK(fit.k.dim() == 2);
    CHECK(fit.projection ==
          block_diag(RationalMatrix::identity(2), RationalMatrix::zero(2, 2)));
  }
}

TEST_CASE("proposition 6.2 inclusions") {
  RationalMatrix t = diag({2, 0});
  MatrixDrazinResult dr = drazin_matrix(t);
  RationalMatrix p = t * dr.inverse;

  InclusionReport on_m = check_inclusions(t, p);
  CHECK(on_m.in_sigma1);
  CHECK(all_pass(on_m.certificates));

  InclusionReport on_zero = check_inclusions(t, RationalMatrix::zero(2, 2));
  CHECK(on_zero.in_sigma1);
  CHECK(all_pass(on_zero.certificates));

  // nilpotent T: a nonzero commuting idempotent must fail the precondition
  RationalMatrix nil = jordan_block(2, Rational(0));
  InclusionReport rejected =
      check_inclusions(nil, RationalMatrix::identity(2));
  CHECK_FALSE(rejected.in_sigma1);
}

TEST_CASE("core range") {
  CHECK(core_range(diag({2, 0})) ==
        Subspace::column_space(unit_column(2, 0)));
  CHECK(core_range(RationalMatrix::from_rows({{2, 1}, {1, 1}})) ==
        Subspace::full(2));
  CHECK(core_range(jordan_block(3, Rational(0))).dim() == 0);
}

TEST_CASE("rosenblum blocks") {
  SUBCASE("scalar blocks") {
    MatrixDecompositionReport report =
        rosenblum_block(diag({2}), RationalMatrix::zero(1, 1));
    CHECK(report.greatest == diag({1, 0}));
  }

  SUBCASE("diag(2,3) with a nilpotent Jordan block") {
    MatrixDecompositionReport report =
        rosenblum_block(diag({2, 3}), jordan_block(2, Rational(0)));
    CHECK(report.x == block_diag(diag({2, 3}), RationalMatrix::zero(2, 2)));
    CHECK(report.y ==
          block_diag(RationalMatrix::zero(2, 2), jordan_block(2, Rational(0))));
  }

  SUBCASE("shear block") {
    RationalMatrix shear = RationalMatrix::from_rows({{1, 1}, {0, 1}});
    MatrixDecompositionReport report =
        rosenblum_block(shear, RationalMatrix::zero(1, 1));
    CHECK(report.x == block_diag(shear, RationalMatrix::zero(1, 1)));
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(rosenblum_block(diag({0}), RationalMatrix::zero(1, 1)),
                    PreconditionFailed);
    CHECK_THROWS_AS(rosenblum_block(diag({2}), diag({1})),
                    PreconditionFailed);
  }
}

TEST_CASE("nilpotent sigma1 certificate for truncated shifts") {
  for (int n = 2; n <= 8; ++n) {
    RationalMatrix t = jordan_block(n, Rational(0));
    CHECK(all_pass(nilpotent_sigma1_certificate(t)));
  }
  CHECK_THROWS_AS(nilpotent_sigma1_certificate(diag({1, 0})),
                  PreconditionFailed);
}

TEST_CASE("kernel meets hyperrange trivially") {
  for (const RationalMatrix& t :
       {diag({2, 0}), jordan_block(3, Rational(0)),
        block_diag(diag({2, 3}), jordan_block(2, Rational(0))),
        RationalMatrix::from_rows({{1, 1}, {1, 1}})}) {
    CHECK(Subspace::kernel(t).intersect(hyperrange(t)).dim() == 0);
  }
}

}  // TEST_SUITE
