#pragma once

// Splitting-type arithmetic on rational curves: the generic almost-balanced
// type of given rank and degree, twist cohomology on P^1, the h^1 jump value
// carried by a reducible fiber, and nodal gluing in generic position.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "jrc/exact.hpp"

namespace jrc {

/// Multiset k_1 >= ... >= k_r of a Grothendieck decomposition (+)O(k_i).
struct SplittingType {
  std::vector<Int> parts;  // weakly decreasing

  SplittingType() = default;
  explicit SplittingType(std::vector<Int> ks) : parts(std::move(ks)) {
    if (parts.empty()) throw invalid_input("splitting type needs at least one part");
    std::sort(parts.begin(), parts.end(), std::greater<Int>());
  }

  int rank() const { return static_cast<int>(parts.size()); }

  Int degree() const {
    return std::accumulate(parts.begin(), parts.end(), Int(0));
  }

  bool operator==(const SplittingType& o) const { return parts == o.parts; }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += parts[i].str();
    }
    return out + ")";
  }
};

/// The unique almost-balanced type (k^s, (k-1)^(r-s)) of rank r and total
/// degree deg; balanced exactly when r divides deg.
inline SplittingType generic_split(int r, const Int& deg) {
  if (r < 1) throw invalid_input("generic_split: rank must be positive");
  Int k = ceil_div(deg, r);
  Int s = deg - Int(r) * (k - 1);  // 1 <= s <= r
  std::vector<Int> parts;
  parts.reserve(static_cast<std::size_t>(r));
  for (Int i = 0; i < s; ++i) parts.push_back(k);
  for (Int i = s; i < r; ++i) parts.push_back(k - 1);
  return SplittingType(std::move(parts));
}

inline bool is_almost_balanced(const SplittingType& st) {
  return st.parts.front() - st.parts.back() <= 1;
}

/// h^0 of (+)O(k_i + m) on P^1.
inline Int h0_twist(const SplittingType& st, const Int& m) {
  Int total = 0;
  for (const Int& k : st.parts) {
    Int term = k + m + 1;
    if (term > 0) total += term;
  }
  return total;
}

/// h^1 of (+)O(k_i + m) on P^1.
inline Int h1_twist(const SplittingType& st, const Int& m) {
  Int total = 0;
  for (const Int& k : st.parts) {
    Int term = -(k + m) - 1;
    if (term > 0) total += term;
  }
  return total;
}

/// h^1 contributed by a degree-d1 component carrying twist t_I: zero up to
/// the threshold ceil(a*d1/r), and r*t_I - a*d1 - r past it.  Equals
/// h1_twist(generic_split(r, a*d1), -t_I) for every argument combination.
inline Int jump_h1(int r, const Int& a, int d1, const Int& tI) {
  if (r < 1) throw invalid_input("jump_h1: rank must be positive");
  if (d1 < 1) throw invalid_input("jump_h1: component degree must be positive");
  Int ad1 = a * d1;
  if (tI <= ceil_div(ad1, r)) return 0;
  return Int(r) * tI - ad1 - r;
}

/// Splitting type of the glued bundle on a 1-nodal curve whose components
/// carry st1 and st2, with positive subspaces in general position.  Only the
/// generic-position outcome is modeled; unbalanced inputs are rejected.
inline SplittingType glue_nodal(int r, const SplittingType& st1, const SplittingType& st2) {
  if (st1.rank() != r || st2.rank() != r)
    throw invalid_input("glue_nodal: both components must have rank " + std::to_string(r));
  if (!is_almost_balanced(st1) || !is_almost_balanced(st2))
    throw invalid_input("unbalanced component: gluing type not determined by generic matching");
  return generic_split(r, st1.degree() + st2.degree());
}

}  // namespace jrc
