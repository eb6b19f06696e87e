#include "geninv/local_spectral.hpp"

#include <cmath>

#include "geninv/exceptions.hpp"

namespace geninv {

namespace {

void require_square(const RationalMatrix& t) {
  if (!t.is_square()) {
    throw InputError("operator must be a square matrix");
  }
}

}  // namespace

Subspace hyperrange(const RationalMatrix& t) {
  require_square(t);
  return Subspace::column_space(t.power(t.rows()));
}

Subspace hyperkernel(const RationalMatrix& t) {
  require_square(t);
  return Subspace::kernel(t.power(t.rows()));
}

QuasinilpotentPart quasinilpotent_part(const RationalMatrix& t) {
  QuasinilpotentPart result;
  result.space = hyperkernel(t);

  bool integral_small = true;
  for (int i = 0; i < t.rows() && integral_small; ++i) {
    for (int j = 0; j < t.cols() && integral_small; ++j) {
      const Rational& x = t.at(i, j);
      integral_small = denominator(x) == 1 && numerator(x) >= -8 &&
                       numerator(x) <= 8;
    }
  }
  if (integral_small && result.space.dim() > 0) {
    // ||T^n x||^{1/n} at n = 4*dim for each basis vector, in doubles.
    result.probe_ran = true;
    int n = 4 * t.rows();
    for (int c = 0; c < result.space.dim(); ++c) {
      std::vector<double> v(t.rows());
      for (int i = 0; i < t.rows(); ++i) {
        v[i] = static_cast<double>(result.space.basis().at(i, c));
      }
      for (int step = 0; step < n; ++step) {
        std::vector<double> next(t.rows(), 0.0);
        for (int i = 0; i < t.rows(); ++i) {
          for (int j = 0; j < t.cols(); ++j) {
            next[i] += static_cast<double>(t.at(i, j)) * v[j];
          }
        }
        v = std::move(next);
      }
      double norm = 0.0;
      for (double x : v) {
        norm += x * x;
      }
      norm = std::sqrt(norm);
      result.probe_max =
          std::max(result.probe_max, std::pow(norm, 1.0 / n));
    }
  }
  return result;
}

Subspace analytic_core(const RationalMatrix& t) {
  Subspace k = hyperrange(t);
  if (k.image_under(t) != k) {
    throw EquivalenceMismatch("analytic core is not T-stable onto itself");
  }
  return k;
}

FittingDecomposition fitting_decomposition(const RationalMatrix& t) {
  require_square(t);
  int n = t.rows();
  FittingDecomposition result;
  result.h0 = hyperkernel(t);
  result.k = hyperrange(t);

  MatrixDrazinResult dr = drazin_matrix(t);
  RationalMatrix m = t * dr.inverse;
  result.projection = m;

  result.certificates.push_back(
      {"H0 and K intersect trivially",
       result.h0.intersect(result.k).dim() == 0});
  result.certificates.push_back(
      {"H0 + K is the whole space",
       result.h0.sum(result.k) == Subspace::full(n)});
  result.certificates.push_back({"M idempotent", m * m == m});
  result.certificates.push_back({"M = TT^D", m == dr.inverse * t});
  result.certificates.push_back({"TM = MT", t * m == m * t});
  result.certificates.push_back(
      {"R(M) = K", Subspace::column_space(m) == result.k});
  result.certificates.push_back(
      {"N(M) = H0", Subspace::kernel(m) == result.h0});
  result.certificates.push_back(
      {"M complements the spectral idempotent",
       RationalMatrix::identity(n) - m == spectral_idempotent(t)});
  result.certificates.push_back(
      {"M commutes with the commutant of T",
       [&] {
         for (const RationalMatrix& b : commutant_basis(t)) {
           if (b * m != m * b) {
             return false;
           }
         }
         return true;
       }()});

  // T restricted to K in the K-basis: solve B C = T B column by column,
  // then invert C exactly.
  bool restriction_invertible = true;
  if (result.k.dim() > 0) {
    const RationalMatrix& b = result.k.basis();
    RationalMatrix tb = t * b;
    RrefResult solved = rref(hstack(b, tb));
    RationalMatrix c(result.k.dim(), result.k.dim());
    for (int i = 0; i < result.k.dim(); ++i) {
      for (int j = 0; j < result.k.dim(); ++j) {
        c.at(i, j) = solved.reduced.at(i, result.k.dim() + j);
      }
    }
    restriction_invertible =
        solved.rank == result.k.dim() && b * c == tb && inverse(c).has_value();
  }
  result.certificates.push_back(
      {"T restricted to K is invertible", restriction_invertible});

  if (!all_pass(result.certificates)) {
    throw EquivalenceMismatch("Fitting decomposition certificates failed");
  }
  return result;
}

InclusionReport check_inclusions(const RationalMatrix& t,
                                 const RationalMatrix& p) {
  require_square(t);
  InclusionReport report;
  report.in_sigma1 = in_sigma1(t, p);
  if (!report.in_sigma1) {
    return report;  // NotInSigma1: reported, not an invariant violation
  }
  Subspace k = hyperrange(t);
  Subspace h0 = hyperkernel(t);
  report.certificates.push_back(
      {"R(P) inside K(T)", k.contains(Subspace::column_space(p))});
  report.certificates.push_back(
      {"H0(T) inside N(P)", Subspace::kernel(p).contains(h0)});
  return report;
}

Subspace core_range(const RationalMatrix& t) {
  require_square(t);
  MatrixDrazinResult dr = drazin_matrix(t);
  RationalMatrix m = t * dr.inverse;
  Subspace k_nu = Subspace::column_space(t * m);
  bool ok = k_nu == Subspace::column_space(m) && k_nu == hyperrange(t) &&
            k_nu.image_under(t) == k_nu;
  if (!ok) {
    throw EquivalenceMismatch("core range certificates failed");
  }
  return k_nu;
}

MatrixDecompositionReport rosenblum_block(const RationalMatrix& x,
                                          const RationalMatrix& y) {
  if (!x.is_square() || !y.is_square()) {
    throw PreconditionFailed("blocks must be square");
  }
  if (!inverse(x).has_value()) {
    throw PreconditionFailed("X block must be invertible");
  }
  if (!is_nilpotent(y)) {
    throw PreconditionFailed("Y block must be nilpotent");
  }
  RationalMatrix t = block_diag(x, y);
  MatrixDecompositionReport report = natural_core_decomposition_matrix(t);

  RationalMatrix expected_x =
      block_diag(x, RationalMatrix::zero(y.rows(), y.cols()));
  RationalMatrix expected_y =
      block_diag(RationalMatrix::zero(x.rows(), x.cols()), y);
  RationalMatrix expected_m = block_diag(
      RationalMatrix::identity(x.rows()),
      RationalMatrix::zero(y.rows(), y.cols()));
  report.certificates.push_back({"x = diag(X, 0)", report.x == expected_x});
  report.certificates.push_back({"y = diag(0, Y)", report.y == expected_y});
  report.certificates.push_back(
      {"M = diag(I, 0)", report.greatest == expected_m});
  if (!all_pass(report.certificates)) {
    throw EquivalenceMismatch("Rosenblum block decomposition mismatch");
  }
  return report;
}

std::vector<Certificate> nilpotent_sigma1_certificate(const RationalMatrix& t) {
  require_square(t);
  if (!is_nilpotent(t)) {
    throw PreconditionFailed("certificate applies to nilpotent matrices");
  }
  std::vector<Certificate> certs;
  certs.push_back({"hyperrange reduces to 0", hyperrange(t).dim() == 0});

  // Any P in Sigma_1(T) satisfies P = (T^{||P})^n T^n = 0 once T^n = 0, so
  // only the zero idempotent may pass the membership test.  The battery
  // tries the identity, TT^D, and every generated spectral candidate.
  std::vector<RationalMatrix> candidates;
  candidates.push_back(RationalMatrix::identity(t.rows()));
  MatrixDrazinResult dr = drazin_matrix(t);
  candidates.push_back(t * dr.inverse);
  for (const SpectralProjection& c : spectral_cluster_projections(t)) {
    candidates.push_back(c.projection);
  }
  bool only_zero = true;
  for (const RationalMatrix& p : candidates) {
    if (!p.is_zero() && in_sigma1(t, p)) {
      only_zero = false;
    }
  }
  certs.push_back({"no nonzero commuting idempotent below T", only_zero});
  certs.push_back({"TT^D = 0", (t * dr.inverse).is_zero()});
  return certs;
}

}  // namespace geninv
