#pragma once

// Rational-curve counts N_d(a.): the plane counts N_d come from the
// Kontsevich recursion; counts for n > 2 are injected through an override
// table, never computed here.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

#include "jrc/exact.hpp"

namespace jrc {

/// Incidence conditions: codimensions a_i of a generic collection of linear
/// subspaces in P^n.  Codimensions below 2 impose nothing and are rejected;
/// codimensions above n are allowed and make any count vanish.
struct ConditionVector {
  int n = 2;
  std::vector<int> codims;

  ConditionVector() = default;
  ConditionVector(int ambient, std::vector<int> a) : n(ambient), codims(std::move(a)) {
    if (n < 2) throw invalid_input("ambient dimension must be at least 2");
    for (int c : codims)
      if (c < 2) throw invalid_input("condition codimension must be at least 2");
  }

  static ConditionVector plane_points(int count) {
    return ConditionVector(2, std::vector<int>(static_cast<std::size_t>(count), 2));
  }

  /// dim B for degree-d curves meeting these conditions.
  long long expected_dim(int d) const {
    long long sum = 0;
    for (int c : codims) sum += c - 1;
    return static_cast<long long>(n + 1) * d + (n - 3) - sum;
  }
};

namespace detail {

inline const Int& plane_count_locked(int d, std::vector<Int>& table) {
  // table[i] = N_{i+1}; fill bottom-up so each N_d sees all smaller counts.
  while (static_cast<int>(table.size()) < d) {
    int m = static_cast<int>(table.size()) + 1;
    if (m == 1) {
      table.emplace_back(1);
      continue;
    }
    Int total = 0;
    for (int d1 = 1; d1 < m; ++d1) {
      int d2 = m - d1;
      Int contrib = table[d1 - 1] * table[d2 - 1] * d1 * d1 * d2;
      contrib *= Int(d2) * binom(3 * m - 4, 3 * d1 - 2) -
                 Int(d1) * binom(3 * m - 4, 3 * d1 - 1);
      total += contrib;
    }
    table.push_back(total);
  }
  return table[d - 1];
}

}  // namespace detail

/// N_d: irreducible rational plane curves of degree d through 3d-1 general
/// points.  Memoized process-wide; safe to call concurrently.
inline Int plane_count(int d) {
  if (d <= 0) throw invalid_input("plane_count: degree must be positive");
  static std::mutex guard;
  static std::vector<Int> table;
  std::lock_guard<std::mutex> lock(guard);
  return detail::plane_count_locked(d, table);
}

/// Lookup key for injected counts: ambient dimension, degree, and the
/// multiset of condition codimensions.
struct CountKey {
  int n = 0;
  int d = 0;
  std::vector<int> codims;  // sorted ascending

  CountKey(int ambient, int degree, std::vector<int> a)
      : n(ambient), d(degree), codims(std::move(a)) {
    std::sort(codims.begin(), codims.end());
  }

  auto operator<=>(const CountKey&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "N:" << n << "," << d << ",";
    for (std::size_t i = 0; i < codims.size(); ++i) {
      if (i) os << "+";
      os << codims[i];
    }
    return os.str();
  }
};

/// Serves N_d(a.): the built-in plane recursion for n = 2, an override table
/// for everything else.
class CountProvider {
 public:
  CountProvider() = default;

  void add_override(CountKey key, Int value) {
    if (value < 0) throw invalid_input("count override must be nonnegative: " + key.str());
    overrides_[std::move(key)] = std::move(value);
  }

  /// N_d(a.) when the expected dimension is zero; otherwise throws.
  Int count(int d, const ConditionVector& conds) const {
    if (d <= 0) throw invalid_input("count: degree must be positive");
    if (conds.expected_dim(d) != 0) throw invalid_input("not a finite count");
    return count_unchecked(d, conds);
  }

  /// Same as count() but reports a dimension mismatch as "no count" instead
  /// of an error; used by boundary sums that probe impossible splits.
  std::optional<Int> count_if_finite(int d, const ConditionVector& conds) const {
    if (d <= 0) return std::nullopt;
    if (conds.expected_dim(d) != 0) return std::nullopt;
    return count_unchecked(d, conds);
  }

  bool has_override(const CountKey& key) const { return overrides_.count(key) != 0; }

 private:
  Int count_unchecked(int d, const ConditionVector& conds) const {
    for (int c : conds.codims)
      if (c > conds.n) return 0;  // empty condition
    if (conds.n == 2) return plane_count(d);
    CountKey key(conds.n, d, conds.codims);
    auto it = overrides_.find(key);
    if (it == overrides_.end())
      throw unavailable("count unavailable: supply override " + key.str());
    return it->second;
  }

  std::map<CountKey, Int> overrides_;
};

}  // namespace jrc
