#ifndef GENINV_MATRIX_INVERSES_HPP_
#define GENINV_MATRIX_INVERSES_HPP_

#include <optional>
#include <vector>

#include "geninv/inverses.hpp"
#include "geninv/matrix.hpp"
#include "geninv/polynomial.hpp"

namespace geninv {

struct MatrixInverseReport {
  bool exists = false;
  std::optional<RationalMatrix> witness;
  std::vector<Certificate> certificates;
};

struct MatrixDrazinResult {
  int index = 0;
  RationalMatrix inverse;
  std::vector<Certificate> certificates;
};

// Natural core decomposition a = x + y: x = aM group invertible in the
// bicommutant, y nilpotent, xy = yx = 0, with M = aa^D the greatest element
// of Sigma_2(a) and b = a^D = x#.
struct MatrixDecompositionReport {
  RationalMatrix x;
  RationalMatrix y;
  RationalMatrix greatest;  // M
  RationalMatrix inverse;   // b
  int nilpotency_degree = 0;
  std::vector<Certificate> certificates;
};

// One spectral cluster of the characteristic polynomial: a rational
// eigenvalue with its algebraic multiplicity, or (lambda absent) the
// residual factor without rational roots.  projection is the idempotent
// onto the cluster's generalized eigenspace, a polynomial in the matrix.
struct SpectralProjection {
  std::optional<Rational> lambda;
  int multiplicity = 0;
  RationalMatrix projection;
};

struct Sigma2Report {
  RationalMatrix greatest;                // M = AA^D
  std::vector<RationalMatrix> members;    // generated members of Sigma_2(A)
  std::vector<Certificate> certificates;
  bool pass = false;
};

// Green's preorders in the multiplicative semigroup of square matrices:
// A <=_L B iff A = XB iff rowspace(A) inside rowspace(B), and dually.
bool matrix_leq(GreenKind kind, const RationalMatrix& a,
                const RationalMatrix& b);
bool matrix_equiv(GreenKind kind, const RationalMatrix& a,
                  const RationalMatrix& b);

// Sigma membership for an idempotent candidate: P is in Sigma_0(A) iff
// PAP is invertible in the corner PM_nP, i.e. rank(PAP) = rank(P).
bool in_sigma0(const RationalMatrix& a, const RationalMatrix& p);
bool in_sigma1(const RationalMatrix& a, const RationalMatrix& p);
bool in_sigma2(const RationalMatrix& a, const RationalMatrix& p,
               const std::vector<RationalMatrix>& commutant);

// Deterministic inner inverse d d^- d = d from the full-rank factorization
// d = PQ (P = pivot columns in ascending order, Q = nonzero RREF rows):
// d^- = Q^T (QQ^T)^{-1} (P^T P)^{-1} P^T.
RationalMatrix inner_inverse(const RationalMatrix& d);

// Unit criterion: a^{||d} exists iff u = da + 1 - dd^- is a unit iff
// v = ad + 1 - d^-d is a unit, and then a^{||d} = u^{-1}d = dv^{-1}.
// Certifies both closed forms, the group-inverse formulas d(ad)# and
// (da)#d, and invariance under a perturbed inner inverse.
MatrixInverseReport invert_along(const RationalMatrix& a,
                                 const RationalMatrix& d);

// Idempotent specialization u = ea + 1 - e, v = ae + 1 - e; in the
// commuting case additionally checks the sufficient criterion
// (a + 1 - e unit => e <=_H a) and the unit test 1 + ae - e.
MatrixInverseReport invert_along_idempotent(const RationalMatrix& a,
                                            const RationalMatrix& e);

// Exists iff rank(A) = rank(A^2); computed as P(QAP)^{-2}Q from the
// full-rank factorization A = PQ.
std::optional<RationalMatrix> group_inverse_matrix(const RationalMatrix& a);

// Index = smallest k >= 1 with rank(A^k) = rank(A^{k+1}) (invertible
// matrices report index 1 with A^D = A^{-1}); A^D = A^k (A^{2k+1})^- A^k.
MatrixDrazinResult drazin_matrix(const RationalMatrix& a);

// p = 1 - AA^D, certified quasipolar: p^2 = p, Ap = pA, Ap nilpotent,
// A + p invertible, p in the bicommutant of A.
RationalMatrix spectral_idempotent(const RationalMatrix& a);

MatrixDecompositionReport natural_core_decomposition_matrix(
    const RationalMatrix& a);

// Basis of {X : XA = AX}, solved exactly as an n^2 x n^2 linear system.
std::vector<RationalMatrix> commutant_basis(const RationalMatrix& a);
std::vector<RationalMatrix> bicommutant_basis(const RationalMatrix& a);

// Degree of the minimal polynomial (first linear dependence among powers).
int minimal_polynomial_degree(const RationalMatrix& a);

// Cluster projections from the rational splitting of the characteristic
// polynomial (Bezout interpolation on coprime factors).  Partial by
// construction: only rational eigenvalues are split off individually;
// their complement stays one residual cluster.  The projections sum to 1.
std::vector<SpectralProjection> spectral_cluster_projections(
    const RationalMatrix& a);

// Falsification battery for Theorem-4.9-style greatestness: every generated
// member of Sigma_2(A) must lie below M = AA^D, M must equal the sum of the
// nonzero cluster projections, and a singular non-nilpotent A must have
// M != 0.  max_members caps the subset enumeration.
Sigma2Report sigma2_greatest_check(const RationalMatrix& a,
                                   int max_members = 64);

// vec(A) as a 1 x (rows*cols) row, for span comparisons.
RationalMatrix vectorize(const RationalMatrix& a);

}  // namespace geninv

#endif  // GENINV_MATRIX_INVERSES_HPP_
