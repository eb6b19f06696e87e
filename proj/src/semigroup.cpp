#include "geninv/semigroup.hpp"

#include <algorithm>
#include <map>

#include "geninv/exceptions.hpp"

namespace geninv {

bool IdempotentPoset::leq_ids(element_id e, element_id f) const {
  auto pos = [&](element_id x) {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    return static_cast<std::size_t>(it - elements.begin());
  };
  return leq[pos(e)][pos(f)];
}

Semigroup::Semigroup(int order, std::vector<element_id> table)
    : order_(order), table_(std::move(table)) {
  detect_identity();
  if (order_ > 64) {
    build_ideal_bitsets();
  }
}

void Semigroup::detect_identity() {
  for (element_id e = 0; e < order_; ++e) {
    bool ok = true;
    for (element_id x = 0; x < order_ && ok; ++x) {
      ok = product(e, x) == x && product(x, e) == x;
    }
    if (ok) {
      identity_ = e;
      return;
    }
  }
}

void Semigroup::build_ideal_bitsets() {
  use_bitsets_ = true;
  blocks_ = static_cast<std::size_t>(order_ + 63) / 64;
  left_ideal_.assign(blocks_ * order_, 0);
  right_ideal_.assign(blocks_ * order_, 0);
  auto set_bit = [&](std::vector<std::uint64_t>& bits, element_id b,
                     element_id a) {
    bits[blocks_ * b + a / 64] |= std::uint64_t{1} << (a % 64);
  };
  for (element_id b = 0; b < order_; ++b) {
    set_bit(left_ideal_, b, b);  // identity multiplier of S^1
    set_bit(right_ideal_, b, b);
    for (element_id x = 0; x < order_; ++x) {
      set_bit(left_ideal_, b, product(x, b));
      set_bit(right_ideal_, b, product(b, x));
    }
  }
}

Semigroup Semigroup::from_cayley(int order,
                                 const std::vector<std::vector<int>>& table) {
  if (order <= 0) {
    throw InputError("semigroup order must be positive");
  }
  if (static_cast<int>(table.size()) != order) {
    throw InputError("table must have exactly `order` rows");
  }
  std::vector<element_id> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i) {
    if (static_cast<int>(table[i].size()) != order) {
      throw InputError("table row " + std::to_string(i) + " is not square");
    }
    for (int j = 0; j < order; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= order) {
        throw OutOfRangeEntry(i, j, v);
      }
      flat.push_back(v);
    }
  }
  auto at = [&](int i, int j) { return flat[static_cast<std::size_t>(i) * order + j]; };
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      for (int k = 0; k < order; ++k) {
        if (at(at(i, j), k) != at(i, at(j, k))) {
          throw AssociativityViolation(i, j, k);
        }
      }
    }
  }
  return Semigroup(order, std::move(flat));
}

Semigroup Semigroup::from_cayley_unchecked(int order,
                                           const std::vector<int>& flat_table) {
  if (order <= 0 ||
      flat_table.size() != static_cast<std::size_t>(order) * order) {
    throw InputError("bad unchecked table shape");
  }
  for (std::size_t p = 0; p < flat_table.size(); ++p) {
    if (flat_table[p] < 0 || flat_table[p] >= order) {
      throw OutOfRangeEntry(static_cast<int>(p) / order,
                            static_cast<int>(p) % order, flat_table[p]);
    }
  }
  return Semigroup(order, flat_table);
}

Semigroup Semigroup::from_transformations(
    int degree,
    const std::vector<std::vector<int>>& generators,
    std::size_t closure_cap) {
  if (degree <= 0) {
    throw InputError("degree must be positive");
  }
  if (generators.empty()) {
    throw InputError("at least one generator required");
  }
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) {
      throw InputError("generator is not a total map on the degree");
    }
    for (int v : g) {
      if (v < 0 || v >= degree) {
        throw InputError("generator image out of range");
      }
    }
  }

  auto compose = [degree](const std::vector<int>& x,
                          const std::vector<int>& y) {
    // (x*y)(i) = y(x(i)): apply x first.
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) {
      r[i] = y[x[i]];
    }
    return r;
  };

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, element_id> index;
  for (const auto& g : generators) {
    if (index.emplace(g, static_cast<element_id>(elems.size())).second) {
      elems.push_back(g);
    }
  }
  // Breadth-first over generator application fixes the canonical numbering.
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (const auto& g : generators) {
      auto p = compose(elems[q], g);
      if (index.emplace(p, static_cast<element_id>(elems.size())).second) {
        elems.push_back(p);
        if (elems.size() > closure_cap) {
          throw ClosureTooLarge(closure_cap);
        }
      }
    }
  }

  int order = static_cast<int>(elems.size());
  std::vector<element_id> flat(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      flat[static_cast<std::size_t>(i) * order + j] =
          index.at(compose(elems[i], elems[j]));
    }
  }
  return Semigroup(order, std::move(flat));
}

element_id Semigroup::power(element_id a, long n) const {
  element_id r = a;
  for (long i = 1; i < n; ++i) {
    r = product(r, a);
  }
  return r;
}

bool Semigroup::leq_l(element_id a, element_id b) const {
  if (use_bitsets_) {
    return (left_ideal_[blocks_ * b + a / 64] >> (a % 64)) & 1;
  }
  if (a == b) {
    return true;  // identity of S^1
  }
  for (element_id x = 0; x < order_; ++x) {
    if (product(x, b) == a) {
      return true;
    }
  }
  return false;
}

bool Semigroup::leq_r(element_id a, element_id b) const {
  if (use_bitsets_) {
    return (right_ideal_[blocks_ * b + a / 64] >> (a % 64)) & 1;
  }
  if (a == b) {
    return true;
  }
  for (element_id x = 0; x < order_; ++x) {
    if (product(b, x) == a) {
      return true;
    }
  }
  return false;
}

bool Semigroup::leq(GreenKind kind, element_id a, element_id b) const {
  switch (kind) {
    case GreenKind::L: return leq_l(a, b);
    case GreenKind::R: return leq_r(a, b);
    case GreenKind::H: return leq_l(a, b) && leq_r(a, b);
  }
  return false;
}

bool Semigroup::equiv(GreenKind kind, element_id a, element_id b) const {
  return leq(kind, a, b) && leq(kind, b, a);
}

std::vector<element_id> Semigroup::green_class(GreenKind kind,
                                               element_id a) const {
  std::vector<element_id> out;
  for (element_id b = 0; b < order_; ++b) {
    if (equiv(kind, a, b)) {
      out.push_back(b);
    }
  }
  return out;
}

std::vector<element_id> Semigroup::idempotents() const {
  std::vector<element_id> out;
  for (element_id e = 0; e < order_; ++e) {
    if (is_idempotent(e)) {
      out.push_back(e);
    }
  }
  return out;
}

bool Semigroup::natural_leq(element_id e, element_id f) const {
  return product(e, f) == e && product(f, e) == e;
}

IdempotentPoset Semigroup::idempotent_poset() const {
  IdempotentPoset poset;
  poset.elements = idempotents();
  std::size_t m = poset.elements.size();
  poset.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      poset.leq[i][j] = natural_leq(poset.elements[i], poset.elements[j]);
    }
  }
  // Partial-order sanity: cannot fail on a valid semigroup, guards bugs.
  for (std::size_t i = 0; i < m; ++i) {
    if (!poset.leq[i][i]) {
      throw EquivalenceMismatch("natural order not reflexive");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && poset.leq[i][j] && poset.leq[j][i]) {
        throw EquivalenceMismatch("natural order not antisymmetric");
      }
      for (std::size_t k = 0; k < m; ++k) {
        if (poset.leq[i][j] && poset.leq[j][k] && !poset.leq[i][k]) {
          throw EquivalenceMismatch("natural order not transitive");
        }
      }
    }
  }
  return poset;
}

std::vector<element_id> Semigroup::commutant(
    const std::vector<element_id>& set) const {
  std::vector<element_id> out;
  for (element_id x = 0; x < order_; ++x) {
    bool ok = true;
    for (element_id a : set) {
      if (product(x, a) != product(a, x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<element_id> Semigroup::bicommutant(
    const std::vector<element_id>& set) const {
  return commutant(commutant(set));
}

CornerMonoid Semigroup::corner_monoid(element_id e) const {
  if (!is_idempotent(e)) {
    throw NotIdempotent("corner monoid requires an idempotent, got element "
                        + std::to_string(e));
  }
  std::vector<bool> seen(order_, false);
  for (element_id s = 0; s < order_; ++s) {
    seen[product(product(e, s), e)] = true;
  }
  CornerMonoid corner;
  corner.unit = e;
  for (element_id x = 0; x < order_; ++x) {
    if (seen[x]) {
      corner.elements.push_back(x);
    }
  }
  return corner;
}

std::vector<std::vector<int>> Semigroup::table_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      rows[i][j] = product(i, j);
    }
  }
  return rows;
}

Semigroup adjoin_identity(const Semigroup& s) {
  if (s.identity()) {
    return s;
  }
  int n = s.order();
  std::vector<element_id> flat(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      element_id v;
      if (i == n) {
        v = j;
      } else if (j == n) {
        v = i;
      } else {
        v = s.product(i, j);
      }
      flat[static_cast<std::size_t>(i) * (n + 1) + j] = v;
    }
  }
  Semigroup out = Semigroup::from_cayley_unchecked(n + 1, flat);
  out.adjoined_ = true;
  return out;
}

std::optional<element_id> find_zero(const Semigroup& s) {
  for (element_id z = 0; z < s.order(); ++z) {
    bool ok = true;
    for (element_id x = 0; x < s.order() && ok; ++x) {
      ok = s.product(z, x) == z && s.product(x, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace geninv
