#pragma once

// Exact scalar layer: arbitrary-precision integers and rationals plus the
// handful of combinatorial primitives everything else is written against.
// All arithmetic in this library is exact; there is no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace jrc {

using Int = boost::multiprecision::cpp_int;
// Canonical form: lowest terms, positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Bad arguments or violated preconditions (CLI exit code 2).
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Data the library cannot derive and was not given (CLI exit code 3).
class unavailable : public std::runtime_error {
 public:
  explicit unavailable(const std::string& what) : std::runtime_error(what) {}
};

/// Binomial coefficient with the zero convention outside the classical
/// range: returns 0 for k < 0, k > n, or n < 0.  Sums over decompositions
/// can then run over the full index range without guards.
inline Int binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers
  }
  return result;
}

/// Ceiling of p/q toward +infinity; q must be positive.
inline Int ceil_div(const Int& p, const Int& q) {
  if (q <= 0) throw invalid_input("ceil_div: divisor must be positive");
  Int quot = p / q;  // truncates toward zero
  if (p % q != 0 && p > 0) ++quot;
  return quot;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Strict decimal parse: optional leading '-', then digits only.
inline Int parse_decimal(const std::string& s) {
  if (s.empty()) throw invalid_input("empty integer literal");
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw invalid_input("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw invalid_input("bad integer literal: " + s);
  return Int(s);
}

/// Parses "p" or "p/q" with q > 0 after normalization.
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_decimal(s));
  Int num = parse_decimal(s.substr(0, slash));
  Int den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw invalid_input("zero denominator: " + s);
  return Rat(num, den);
}

inline std::string to_string(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

}  // namespace jrc
