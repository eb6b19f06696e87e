#ifndef GENINV_EXCEPTIONS_HPP_
#define GENINV_EXCEPTIONS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geninv {

struct GeninvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (files, CLI arguments, preconditions
// on public entry points).
struct InputError : GeninvError {
  using GeninvError::GeninvError;
};

// A Cayley table failed the associativity scan; carries the first witness
// triple (i, j, k) with (ij)k != i(jk).
struct AssociativityViolation : GeninvError {
  AssociativityViolation(int i, int j, int k)
      : GeninvError("associativity fails at triple (" + std::to_string(i)
                    + ", " + std::to_string(j) + ", " + std::to_string(k)
                    + ")"),
        i(i),
        j(j),
        k(k) {}
  int i;
  int j;
  int k;
};

struct OutOfRangeEntry : GeninvError {
  OutOfRangeEntry(int row, int col, long long value)
      : GeninvError("table entry " + std::to_string(value) + " at ("
                    + std::to_string(row) + ", " + std::to_string(col)
                    + ") is out of range"),
        row(row),
        col(col),
        value(value) {}
  int row;
  int col;
  long long value;
};

struct ClosureTooLarge : GeninvError {
  explicit ClosureTooLarge(std::size_t cap)
      : GeninvError("transformation closure exceeds cap of "
                    + std::to_string(cap) + " elements"),
        cap(cap) {}
  std::size_t cap;
};

struct NotIdempotent : GeninvError {
  using GeninvError::GeninvError;
};

// Internal consistency failure: two routes that must agree (by theorem)
// disagreed.  Always indicates an implementation bug, never bad input.
struct EquivalenceMismatch : GeninvError {
  using GeninvError::GeninvError;
};

// The tau map failed to be a bijection on some semigroup; carries a textual
// counterexample.  Never expected.
struct BijectionFailure : GeninvError {
  using GeninvError::GeninvError;
};

struct CapExceeded : GeninvError {
  using GeninvError::GeninvError;
};

struct PreconditionFailed : GeninvError {
  using GeninvError::GeninvError;
};

}  // namespace geninv

#endif  // GENINV_EXCEPTIONS_HPP_
