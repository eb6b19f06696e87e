#include "geninv/subspace.hpp"

#include "geninv/exceptions.hpp"

namespace geninv {

namespace {

// Canonical basis: RREF the transposed spanning set (rows = vectors), keep
// the nonzero rows, transpose back to columns.
RationalMatrix canonicalize(int ambient, const RationalMatrix& spanning) {
  if (spanning.cols() == 0) {
    return RationalMatrix(ambient, 0);
  }
  RrefResult r = rref(spanning.transpose());
  RationalMatrix basis(ambient, r.rank);
  for (int k = 0; k < r.rank; ++k) {
    for (int i = 0; i < ambient; ++i) {
      basis.at(i, k) = r.reduced.at(k, i);
    }
  }
  return basis;
}

}  // namespace

Subspace::Subspace(int ambient)
    : ambient_(ambient), basis_(ambient, 0) {
  if (ambient < 0) {
    throw InputError("ambient dimension must be non-negative");
  }
}

Subspace Subspace::column_space(const RationalMatrix& a) {
  Subspace s(a.rows());
  s.basis_ = canonicalize(a.rows(), a);
  return s;
}

Subspace Subspace::kernel(const RationalMatrix& a) {
  Subspace s(a.cols());
  s.basis_ = canonicalize(a.cols(), kernel_basis(a));
  return s;
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient); }

Subspace Subspace::full(int ambient) {
  return column_space(RationalMatrix::identity(ambient));
}

bool Subspace::contains(const RationalMatrix& column_vector) const {
  if (column_vector.rows() != ambient_ || column_vector.cols() != 1) {
    throw InputError("contains expects an ambient-sized column vector");
  }
  if (column_vector.is_zero()) {
    return true;
  }
  return rank(hstack(basis_, column_vector)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw InputError("subspace ambient mismatch");
  }
  if (other.dim() == 0) {
    return true;
  }
  return rank(hstack(basis_, other.basis_)) == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw InputError("subspace ambient mismatch");
  }
  return column_space(hstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw InputError("subspace ambient mismatch");
  }
  if (dim() == 0 || other.dim() == 0) {
    return Subspace(ambient_);
  }
  // Kernel of [U | W]: each null vector (x, y) has Ux = -Wy in both spaces.
  RationalMatrix null_space = kernel_basis(hstack(basis_, other.basis_));
  RationalMatrix tops(dim(), null_space.cols());
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < null_space.cols(); ++j) {
      tops.at(i, j) = null_space.at(i, j);
    }
  }
  return column_space(basis_ * tops);
}

Subspace Subspace::image_under(const RationalMatrix& t) const {
  if (t.cols() != ambient_) {
    throw InputError("operator domain mismatch");
  }
  return column_space(t * basis_);
}

}  // namespace geninv
