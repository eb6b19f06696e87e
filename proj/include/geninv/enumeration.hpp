#ifndef GENINV_ENUMERATION_HPP_
#define GENINV_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "geninv/matrix.hpp"
#include "geninv/semigroup.hpp"

namespace geninv {

// Deterministic, platform-independent generator (splitmix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); bound must be positive.  The modulo
  // bias is irrelevant for corpus generation and keeps the stream
  // identical on every platform.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct EnumerationConfig {
  int order = 3;
  bool prune = true;            // incremental associativity rejection
  bool canonical_filter = false;  // keep only tables with sorted first row
  std::size_t max_tables = 0;   // 0 = unlimited; else CapExceeded
  long time_budget_ms = 0;      // 0 = unlimited; else CapExceeded on expiry
  int threads = 1;              // workers own disjoint first-row prefixes
};

// All associative order-n Cayley tables (flattened row-major), in
// lexicographic order.  Backtracks over cells with incremental
// associativity pruning when prune is set, else filters complete tables.
std::vector<std::vector<int>> enumerate_tables(const EnumerationConfig& config);

// Streams the tables of enumerate_tables as validated Semigroup values.
void enumerate_semigroups(const EnumerationConfig& config,
                          const std::function<void(const Semigroup&)>& yield);

// Deterministic corpus helpers ---------------------------------------------

Semigroup random_transformation_semigroup(int degree, int generator_count,
                                          std::uint64_t seed,
                                          std::size_t closure_cap = 10000);

// Exact-rank random matrix: product of integer factors n x r and r x n with
// entries in [-entry_bound, entry_bound]; regenerates (rng stream continues)
// until the rank is exact.
RationalMatrix random_matrix(int n, int target_rank, int entry_bound,
                             std::uint64_t seed);

// In-place variant drawing from an existing stream.
RationalMatrix random_matrix(int n, int target_rank, int entry_bound,
                             SplitMix64& rng);

// Unconstrained integer matrix with entries in [-entry_bound, entry_bound].
RationalMatrix random_integer_matrix(int n, int entry_bound, SplitMix64& rng);

// Strictly upper-triangular (hence nilpotent) random integer matrix.
RationalMatrix random_nilpotent_matrix(int n, int entry_bound, SplitMix64& rng);

}  // namespace geninv

#endif  // GENINV_ENUMERATION_HPP_
