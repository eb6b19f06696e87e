#ifndef GENINV_MATRIX_HPP_
#define GENINV_MATRIX_HPP_

#include <initializer_list>
#include <optional>
#include <vector>

#include "geninv/rational.hpp"

namespace geninv {

// Dense matrix over exact rationals.  All arithmetic is exact; rank and
// invertibility questions therefore have exact answers.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);  // zero-filled

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);
  static RationalMatrix from_rows(
      std::initializer_list<std::initializer_list<long long>> rows);
  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Rational& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
  RationalMatrix operator-() const;
  friend bool operator==(const RationalMatrix& a,
                         const RationalMatrix& b) = default;

  // A^k for k >= 0 (k = 0 gives the identity; requires square).
  RationalMatrix power(int k) const;

  Rational trace() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b);

struct RrefResult {
  RationalMatrix reduced;
  int rank = 0;
  std::vector<int> pivot_columns;
};

// Exact reduced row echelon form (leading entries 1, zeros above and below).
RrefResult rref(const RationalMatrix& a);

int rank(const RationalMatrix& a);

// Exact inverse, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

// Columns form the canonical RREF-derived basis of the null space
// (n x nullity; empty matrix when the kernel is trivial).
RationalMatrix kernel_basis(const RationalMatrix& a);

// A^k = 0 for some k <= rows (requires square).
bool is_nilpotent(const RationalMatrix& a);

// Smallest k >= 0 with A^k = 0, or nullopt when A is not nilpotent.
std::optional<int> nilpotency_index(const RationalMatrix& a);

// Single n x n Jordan block with the given eigenvalue.
RationalMatrix jordan_block(int n, const Rational& lambda);

}  // namespace geninv

#endif  // GENINV_MATRIX_HPP_
