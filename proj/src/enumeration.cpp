#include "geninv/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "geninv/exceptions.hpp"

namespace geninv {

namespace {

// A partial table passes when every fully determined triple associates.
bool partial_associative(const std::vector<int>& table, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      if (xy < 0) {
        continue;
      }
      for (int z = 0; z < n; ++z) {
        int yz = table[y * n + z];
        if (yz < 0) {
          continue;
        }
        int left = table[xy * n + z];
        int right = table[x * n + yz];
        if (left >= 0 && right >= 0 && left != right) {
          return false;
        }
      }
    }
  }
  return true;
}

bool fully_associative(const std::vector<int>& table, int n) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      for (int z = 0; z < n; ++z) {
        if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool first_row_sorted(const std::vector<int>& table, int n) {
  for (int j = 1; j < n; ++j) {
    if (table[j - 1] > table[j]) {
      return false;
    }
  }
  return true;
}

// Cooperative wall-clock budget; the clock is consulted every 1024 nodes
// and expiry is shared across workers.
struct Budget {
  std::chrono::steady_clock::time_point deadline;
  bool enabled = false;
  long long counter = 0;
  std::atomic<bool>* expired = nullptr;

  bool hit() {
    if (!enabled) {
      return false;
    }
    if (expired->load(std::memory_order_relaxed)) {
      return true;
    }
    if ((++counter & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline) {
      expired->store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

// Depth-first completion of the cells at positions >= cell, in row-major
// order with values ascending, which makes the overall output lexicographic.
void complete(std::vector<int>& table, int n, int cell, bool prune,
              std::vector<std::vector<int>>& out, Budget& budget) {
  if (budget.hit()) {
    return;
  }
  int cells = n * n;
  if (cell == cells) {
    if (prune || fully_associative(table, n)) {
      out.push_back(table);
    }
    return;
  }
  for (int value = 0; value < n; ++value) {
    table[cell] = value;
    if (!prune || partial_associative(table, n)) {
      complete(table, n, cell + 1, prune, out, budget);
    }
  }
  table[cell] = -1;
}

}  // namespace

std::vector<std::vector<int>> enumerate_tables(
    const EnumerationConfig& config) {
  int n = config.order;
  if (n < 1) {
    throw InputError("enumeration order must be >= 1");
  }
  int cells = n * n;

  // First-row prefixes in lexicographic order; workers own disjoint
  // prefixes and results merge in prefix order, so the output is identical
  // at any thread count.
  std::vector<std::vector<int>> prefixes;
  {
    std::vector<int> table(cells, -1);
    long long count = 1;
    for (int j = 0; j < n; ++j) {
      count *= n;
    }
    for (long long code = 0; code < count; ++code) {
      long long c = code;
      for (int j = n - 1; j >= 0; --j) {
        table[j] = static_cast<int>(c % n);
        c /= n;
      }
      if (config.canonical_filter && !first_row_sorted(table, n)) {
        continue;
      }
      if (!config.prune || partial_associative(table, n)) {
        prefixes.push_back(table);
      }
    }
  }

  std::vector<std::vector<std::vector<int>>> per_prefix(prefixes.size());
  int workers = std::max(1, config.threads);
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(config.time_budget_ms);
  std::atomic<bool> expired{false};
  if (workers == 1) {
    Budget budget{deadline, config.time_budget_ms > 0, 0, &expired};
    for (std::size_t i = 0; i < prefixes.size() && !budget.hit(); ++i) {
      complete(prefixes[i], n, n, config.prune, per_prefix[i], budget);
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      Budget budget{deadline, config.time_budget_ms > 0, 0, &expired};
      for (;;) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= prefixes.size() || budget.hit()) {
          return;
        }
        complete(prefixes[i], n, n, config.prune, per_prefix[i], budget);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (expired) {
    throw CapExceeded("enumeration exceeded time budget of "
                      + std::to_string(config.time_budget_ms) + " ms");
  }

  std::vector<std::vector<int>> tables;
  for (auto& bucket : per_prefix) {
    for (auto& t : bucket) {
      tables.push_back(std::move(t));
      if (config.max_tables && tables.size() > config.max_tables) {
        throw CapExceeded("enumeration exceeded table cap of "
                          + std::to_string(config.max_tables));
      }
    }
  }
  return tables;
}

void enumerate_semigroups(const EnumerationConfig& config,
                          const std::function<void(const Semigroup&)>& yield) {
  for (const auto& table : enumerate_tables(config)) {
    yield(Semigroup::from_cayley_unchecked(config.order, table));
  }
}

Semigroup random_transformation_semigroup(int degree, int generator_count,
                                          std::uint64_t seed,
                                          std::size_t closure_cap) {
  if (degree < 1 || generator_count < 1) {
    throw InputError("degree and generator count must be positive");
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> generators;
  for (int g = 0; g < generator_count; ++g) {
    std::vector<int> map(degree);
    for (int i = 0; i < degree; ++i) {
      map[i] = static_cast<int>(rng.below(degree));
    }
    generators.push_back(std::move(map));
  }
  return Semigroup::from_transformations(degree, generators, closure_cap);
}

RationalMatrix random_matrix(int n, int target_rank, int entry_bound,
                             SplitMix64& rng) {
  if (n < 1 || target_rank < 0 || target_rank > n || entry_bound < 1) {
    throw InputError("bad random matrix parameters");
  }
  if (target_rank == 0) {
    return RationalMatrix::zero(n, n);
  }
  for (;;) {
    RationalMatrix left(n, target_rank);
    RationalMatrix right(target_rank, n);
    long long span = 2 * static_cast<long long>(entry_bound) + 1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < target_rank; ++j) {
        left.at(i, j) =
            static_cast<long long>(rng.below(span)) - entry_bound;
      }
    }
    for (int i = 0; i < target_rank; ++i) {
      for (int j = 0; j < n; ++j) {
        right.at(i, j) =
            static_cast<long long>(rng.below(span)) - entry_bound;
      }
    }
    RationalMatrix a = left * right;
    if (rank(a) == target_rank) {
      return a;
    }
  }
}

RationalMatrix random_matrix(int n, int target_rank, int entry_bound,
                             std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_matrix(n, target_rank, entry_bound, rng);
}

RationalMatrix random_integer_matrix(int n, int entry_bound, SplitMix64& rng) {
  RationalMatrix a(n, n);
  long long span = 2 * static_cast<long long>(entry_bound) + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = static_cast<long long>(rng.below(span)) - entry_bound;
    }
  }
  return a;
}

RationalMatrix random_nilpotent_matrix(int n, int entry_bound,
                                       SplitMix64& rng) {
  RationalMatrix a(n, n);
  long long span = 2 * static_cast<long long>(entry_bound) + 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a.at(i, j) = static_cast<long long>(rng.below(span)) - entry_bound;
    }
  }
  return a;
}

}  // namespace geninv
