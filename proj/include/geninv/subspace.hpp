#ifndef GENINV_SUBSPACE_HPP_
#define GENINV_SUBSPACE_HPP_

#include "geninv/matrix.hpp"

namespace geninv {

// A subspace of column space Q^n, held as a canonical basis (the RREF of
// the spanning set makes equality a plain matrix comparison).
class Subspace {
 public:
  Subspace() = default;            // zero subspace of the zero space
  explicit Subspace(int ambient);  // zero subspace

  static Subspace column_space(const RationalMatrix& a);
  static Subspace kernel(const RationalMatrix& a);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }

  // ambient x dim, columns form the canonical basis.
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const RationalMatrix& column_vector) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // Image T(V) as a subspace of the codomain.
  Subspace image_under(const RationalMatrix& t) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  int ambient_ = 0;
  RationalMatrix basis_;
};

}  // namespace geninv

#endif  // GENINV_SUBSPACE_HPP_
