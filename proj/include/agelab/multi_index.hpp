#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace agelab {

/// Finitely supported vector of nonnegative integers, indexed by positions
/// 1, 2, 3, ...  Zero entries are never stored.
class MultiIndex {
 public:
  MultiIndex() = default;

  /// epsilon_i: 1 at position i.
  static MultiIndex unit(std::int64_t pos) {
    MultiIndex m;
    m.bump(pos, 1);
    return m;
  }

  void bump(std::int64_t pos, std::int64_t delta);

  std::int64_t at(std::int64_t pos) const {
    auto it = entries_.find(pos);
    return it == entries_.end() ? 0 : it->second;
  }

  bool is_zero() const { return entries_.empty(); }
  const std::map<std::int64_t, std::int64_t>& entries() const { return entries_; }

  bool operator==(const MultiIndex&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> entries_;
};

/// w(i) = sum of position * exponent.
std::int64_t weight(const MultiIndex& i);

/// d(i) = sum of exponents.
std::int64_t size(const MultiIndex& i);

MultiIndex add(const MultiIndex& a, const MultiIndex& b);

/// Throws std::domain_error if any entry would go negative.
MultiIndex sub(const MultiIndex& a, const MultiIndex& b);

/// Reverse lexicographic total order: the first position (from 1 upward)
/// where the entries differ decides; the larger entry is the greater index.
std::strong_ordering revlex_cmp(const MultiIndex& a, const MultiIndex& b);

/// Principal order on pairs: by w(i), then i revlex, then j revlex.
std::strong_ordering principal2_cmp(const std::pair<MultiIndex, MultiIndex>& a,
                                    const std::pair<MultiIndex, MultiIndex>& b);

struct Tuple4 {
  MultiIndex i, j, m, n;
  bool operator==(const Tuple4&) const = default;
};

/// Principal order on quadruples: by w(m)+w(n), then n, then m revlex;
/// ties broken by w(i)+w(j), then j, then i revlex.
std::strong_ordering principal4_cmp(const Tuple4& a, const Tuple4& b);

/// Renders like `(3:1, 1:2)` (position:exponent, descending positions); `0` when empty.
std::string to_string(const MultiIndex& i);

}  // namespace agelab
