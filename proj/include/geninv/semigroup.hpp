#ifndef GENINV_SEMIGROUP_HPP_
#define GENINV_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace geninv {

// Dense 0-based index into one Semigroup instance.
using element_id = int;

enum class GreenKind { L, R, H };

struct CornerMonoid {
  std::vector<element_id> elements;  // sorted, closed under the product
  element_id unit;                   // the idempotent e, two-sided identity
};

// The idempotents of a semigroup under the natural partial order
// e <= f  iff  ef = fe = e.  On idempotents this coincides with <=_H.
struct IdempotentPoset {
  std::vector<element_id> elements;    // sorted
  std::vector<std::vector<bool>> leq;  // leq[i][j] over positions in elements

  bool leq_ids(element_id e, element_id f) const;
};

// A finite semigroup given by its Cayley table.  The table is the single
// source of truth; elements are dense 0-based ids.  Instances are immutable
// after construction and safe to share between threads.
class Semigroup {
 public:
  // Validates ranges and associativity (throws OutOfRangeEntry or
  // AssociativityViolation with the first witness triple).  Detects an
  // existing identity; never adjoins one.
  static Semigroup from_cayley(int order,
                               const std::vector<std::vector<int>>& table);

  // Closure of total maps on {0..degree-1} under composition, with
  // (x*y)(i) = y(x(i)).  Elements are numbered by first discovery in a
  // breadth-first sweep (generators in input order, then products).
  static Semigroup from_transformations(
      int degree,
      const std::vector<std::vector<int>>& generators,
      std::size_t closure_cap = 10000);

  // Table already known associative (enumeration fast path).  Range-checks
  // entries but skips the O(n^3) associativity scan.
  static Semigroup from_cayley_unchecked(int order,
                                         const std::vector<int>& flat_table);

  int order() const { return order_; }

  element_id product(element_id a, element_id b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  // a^n for n >= 1.
  element_id power(element_id a, long n) const;

  std::optional<element_id> identity() const { return identity_; }
  bool adjoined_identity() const { return adjoined_; }

  // Green's preorders over S^1: a <=_L b iff a = xb for some x in S^1.
  bool leq(GreenKind kind, element_id a, element_id b) const;
  bool equiv(GreenKind kind, element_id a, element_id b) const;
  std::vector<element_id> green_class(GreenKind kind, element_id a) const;

  bool is_idempotent(element_id e) const { return product(e, e) == e; }
  std::vector<element_id> idempotents() const;

  // Natural partial order on idempotents; both arguments must be idempotent.
  bool natural_leq(element_id e, element_id f) const;

  IdempotentPoset idempotent_poset() const;

  std::vector<element_id> commutant(const std::vector<element_id>& set) const;
  std::vector<element_id> bicommutant(
      const std::vector<element_id>& set) const;

  // eSe with unit e; throws NotIdempotent.
  CornerMonoid corner_monoid(element_id e) const;

  std::vector<std::vector<int>> table_rows() const;
  const std::vector<element_id>& flat_table() const { return table_; }

 private:
  friend Semigroup adjoin_identity(const Semigroup& s);

  Semigroup(int order, std::vector<element_id> table);

  void detect_identity();
  void build_ideal_bitsets();

  bool leq_l(element_id a, element_id b) const;
  bool leq_r(element_id a, element_id b) const;

  int order_ = 0;
  std::vector<element_id> table_;  // row-major, order_ x order_
  std::optional<element_id> identity_;
  bool adjoined_ = false;

  // Memoized principal-ideal membership, used when order_ > 64: bit a of
  // left_ideal_[b] says a belongs to S^1 b.
  bool use_bitsets_ = false;
  std::size_t blocks_ = 0;
  std::vector<std::uint64_t> left_ideal_;
  std::vector<std::uint64_t> right_ideal_;
};

// Returns S unchanged when S is already a monoid, else S with one new
// two-sided identity appended (flag adjoined_identity() set on the result).
Semigroup adjoin_identity(const Semigroup& s);

// The absorbing element of S, if any (zx = xz = z for all x).
std::optional<element_id> find_zero(const Semigroup& s);

}  // namespace geninv

#endif  // GENINV_SEMIGROUP_HPP_
