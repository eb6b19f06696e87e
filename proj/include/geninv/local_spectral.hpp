#ifndef GENINV_LOCAL_SPECTRAL_HPP_
#define GENINV_LOCAL_SPECTRAL_HPP_

#include <vector>

#include "geninv/matrix_inverses.hpp"
#include "geninv/subspace.hpp"

namespace geninv {

// Local-spectral subspaces of a square rational matrix T acting on column
// space.  The Banach-space limit definitions all stabilize at power
// n = dimension, which is what these compute:
//   hyperrange   T^inf(X) = R(T^n)     (= analytic core K(T) here)
//   hyperkernel  N^inf(T) = N(T^n)     (= quasinilpotent part H_0(T) here)

Subspace hyperrange(const RationalMatrix& t);
Subspace hyperkernel(const RationalMatrix& t);

struct QuasinilpotentPart {
  Subspace space;
  // Advisory double-precision probe of ||T^n x||^{1/n} at n = 4*dim on the
  // basis of the returned space; runs only for integer matrices with
  // entries bounded by 8, and is never load-bearing.
  bool probe_ran = false;
  double probe_max = 0.0;
};

QuasinilpotentPart quasinilpotent_part(const RationalMatrix& t);

// Hyperrange, with the defining property T(K) = K certified exactly.
Subspace analytic_core(const RationalMatrix& t);

struct FittingDecomposition {
  Subspace h0;              // quasinilpotent part
  Subspace k;               // analytic core
  RationalMatrix projection;  // onto K along H_0; equals T T^D
  std::vector<Certificate> certificates;
};

// X = H_0(T) + K(T) (direct), projection M = TT^D commuting with the whole
// commutant of T, T restricted to K exactly invertible.
FittingDecomposition fitting_decomposition(const RationalMatrix& t);

struct InclusionReport {
  bool in_sigma1 = false;  // precondition; false means NotInSigma1
  std::vector<Certificate> certificates;
};

// For P in Sigma_1(T): R(P) inside K(T) and H_0(T) inside N(P).
InclusionReport check_inclusions(const RationalMatrix& t,
                                 const RationalMatrix& p);

// K_nu(T) = R(TM) with M = TT^D; equals R(M) = K(T) and is T-stable.
Subspace core_range(const RationalMatrix& t);

// T = diag(X, Y) with X invertible and Y nilpotent decomposes as
// x = diag(X, 0), y = diag(0, Y), M = diag(I, 0); throws PreconditionFailed
// when X is singular or Y is not nilpotent.
MatrixDecompositionReport rosenblum_block(const RationalMatrix& x,
                                          const RationalMatrix& y);

// For nilpotent T: certifies hyperrange = 0 and that no nonzero generated
// commuting idempotent lies below T (Sigma_1-style certificate).
std::vector<Certificate> nilpotent_sigma1_certificate(const RationalMatrix& t);

}  // namespace geninv

#endif  // GENINV_LOCAL_SPECTRAL_HPP_
