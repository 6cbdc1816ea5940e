#pragma once

// Syzygy-based jumping detector for restricted tangent bundles.  A degree-d
// rational curve in P^n, n | d, given by binary forms (f_0, ..., f_n), is a
// jumping curve for the tangent bundle exactly when the forms admit a
// syzygy of degree d/n - 1.  The full splitting type of the restricted
// tangent bundle is recovered from kernel dimensions of the multiplication
// maps (g_0, ..., g_n) -> sum g_i f_i in increasing degree:
//
//   syzygy_dim(F, k) = h^0 of the dual restricted bundle twisted by d + k,
//
// and successive differences count the parts below each threshold.  All
// ranks are computed by fraction-free elimination on the Toeplitz-block
// convolution matrix of the forms.

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jrc/exact.hpp"
#include "jrc/linalg.hpp"
#include "jrc/splitting.hpp"

namespace jrc {

/// Homogeneous binary form of fixed degree; coeffs[j] multiplies
/// s^(degree-j) t^j.
struct BinaryForm {
  int degree = 0;
  std::vector<Rat> coeffs;

  BinaryForm() : coeffs{Rat(0)} {}
  BinaryForm(int deg, std::vector<Rat> c) : degree(deg), coeffs(std::move(c)) {
    if (degree < 0) throw invalid_input("binary form degree must be nonnegative");
    if (coeffs.size() != static_cast<std::size_t>(degree) + 1)
      throw invalid_input("binary form needs degree+1 coefficients");
  }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
  }

  Rat evaluate(const Rat& s, const Rat& t) const {
    std::vector<Rat> s_pow(coeffs.size()), t_pow(coeffs.size());
    Rat sp = 1, tp = 1;
    for (std::size_t j = 0; j < coeffs.size(); ++j, sp *= s, tp *= t) {
      s_pow[j] = sp;
      t_pow[j] = tp;
    }
    Rat result = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      result += coeffs[j] * s_pow[coeffs.size() - 1 - j] * t_pow[j];
    return result;
  }
};

namespace detail {

using Poly = std::vector<Rat>;  // ascending powers; empty means zero

inline int poly_degree(const Poly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (p[i - 1] != 0) return static_cast<int>(i) - 1;
  return -1;
}

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& b) {
  int db = poly_degree(b);
  if (db < 0) throw std::logic_error("poly_mod: division by zero polynomial");
  poly_trim(a);
  while (poly_degree(a) >= db) {
    int da = poly_degree(a);
    Rat factor = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(da - db + j)] -= factor * b[static_cast<std::size_t>(j)];
    poly_trim(a);
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    // Monic normalization keeps coefficient growth in check.
    if (!b.empty()) {
      Rat lead = b.back();
      for (Rat& c : b) c /= lead;
    }
  }
  return a;
}

/// Dehomogenization q(x) = f(x, 1); the point (1:0) drops out and is
/// accounted for separately through the t-order.
inline Poly dehomogenize(const BinaryForm& f) {
  Poly q(f.coeffs.size());
  for (std::size_t j = 0; j < f.coeffs.size(); ++j)
    q[f.coeffs.size() - 1 - j] = f.coeffs[j];
  poly_trim(q);
  return q;
}

inline int t_order(const BinaryForm& f) {
  for (std::size_t j = 0; j < f.coeffs.size(); ++j)
    if (f.coeffs[j] != 0) return static_cast<int>(j);
  return f.degree + 1;  // zero form
}

/// Degree of the gcd of the given forms as a binary form, i.e. the number
/// of common projective roots with multiplicity.  Zero forms are ignored;
/// all-zero input is rejected.
inline int binary_gcd_degree(const std::vector<BinaryForm>& forms) {
  Poly g;  // zero
  int common_t_order = -1;
  for (const BinaryForm& f : forms) {
    if (f.is_zero()) continue;
    int ot = t_order(f);
    common_t_order = (common_t_order < 0) ? ot : std::min(common_t_order, ot);
    g = poly_gcd(std::move(g), dehomogenize(f));
  }
  if (common_t_order < 0) throw invalid_input("all forms vanish identically");
  return poly_degree(g) + common_t_order;
}

}  // namespace detail

/// A rational curve P^1 -> P^n of degree d: n+1 binary forms of degree d.
/// Construction enforces the structural invariants: matching degrees,
/// no common projective root (basepoint-freeness), and forms not all
/// proportional (the image is a curve, not a point).
struct Parametrization {
  int n = 1;
  int d = 1;
  std::vector<BinaryForm> forms;

  Parametrization(int ambient, int degree, std::vector<BinaryForm> fs)
      : n(ambient), d(degree), forms(std::move(fs)) {
    if (n < 1) throw invalid_input("ambient dimension must be at least 1");
    if (d < 1) throw invalid_input("parametrization degree must be positive");
    if (forms.size() != static_cast<std::size_t>(n) + 1)
      throw invalid_input("parametrization needs n+1 forms");
    for (const BinaryForm& f : forms)
      if (f.degree != d) throw invalid_input("all forms must have degree d");
    if (detail::binary_gcd_degree(forms) != 0)
      throw invalid_input("parametrization has a basepoint: forms share a projective root");
    if (coefficient_rank() < 2)
      throw invalid_input("degenerate parametrization: all forms proportional");
  }

 private:
  int coefficient_rank() const {
    std::vector<std::vector<Rat>> m;
    for (const BinaryForm& f : forms) m.push_back(f.coeffs);
    return rank_rational(m);
  }
};

namespace detail {

/// Toeplitz-block matrix of (g_0,...,g_n) -> sum g_i f_i in degree d+k:
/// rows index monomials s^(d+k-j) t^j, columns the coefficients of the g_i.
inline std::vector<std::vector<Int>> convolution_matrix(const Parametrization& F, int k) {
  const int rows = F.d + k + 1;
  const int block = k + 1;
  const int cols = (F.n + 1) * block;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(rows),
                                  std::vector<Int>(static_cast<std::size_t>(cols), Int(0)));
  for (int i = 0; i <= F.n; ++i) {
    // Clear denominators per form; column scaling preserves rank.
    Int scale = 1;
    for (const Rat& c : F.forms[static_cast<std::size_t>(i)].coeffs)
      scale = lcm(scale, denominator(c));
    for (int l = 0; l < block; ++l) {
      int col = i * block + l;
      for (int j = 0; j <= F.d; ++j) {
        const Rat& c = F.forms[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(j + l)][static_cast<std::size_t>(col)] =
            numerator(c) * (scale / denominator(c));
      }
    }
  }
  return m;
}

inline int multiplication_rank(const Parametrization& F, int k) {
  return bareiss_rank(convolution_matrix(F, k));
}

}  // namespace detail

/// Dimension of the space of degree-k syzygies: tuples (g_0,...,g_n) of
/// degree-k forms with sum g_i f_i = 0.
inline Int syzygy_dim(const Parametrization& F, int k) {
  if (k < 0) throw invalid_input("syzygy_dim: degree must be nonnegative");
  int cols = (F.n + 1) * (k + 1);
  return Int(cols - detail::multiplication_rank(F, k));
}

/// Whether the multiplication map (g_i) -> sum g_i f_i hits every form of
/// degree d+k.
inline bool surjective_at(const Parametrization& F, int k) {
  if (k < 0) throw invalid_input("surjective_at: degree must be nonnegative");
  return detail::multiplication_rank(F, k) == F.d + k + 1;
}

/// Jumping test for the restricted tangent bundle: a syzygy of degree
/// d/n - 1 exists.  Requires n | d.
inline bool is_jumping_tangent(const Parametrization& F) {
  if (F.d % F.n != 0)
    throw invalid_input(
        "jumping criterion undefined: ambient dimension does not divide the degree");
  return syzygy_dim(F, F.d / F.n - 1) > 0;
}

namespace detail {

/// Degree of the fiber of the image point of (ps : pt), counted with
/// multiplicity: the gcd of the 2x2 minors pinning the image point.
inline int fiber_degree_at(const Parametrization& F, const Rat& ps, const Rat& pt) {
  std::vector<Rat> values;
  values.reserve(F.forms.size());
  for (const BinaryForm& f : F.forms) values.push_back(f.evaluate(ps, pt));

  std::vector<BinaryForm> minors;
  for (std::size_t i = 0; i < F.forms.size(); ++i) {
    for (std::size_t j = i + 1; j < F.forms.size(); ++j) {
      std::vector<Rat> c(static_cast<std::size_t>(F.d) + 1);
      bool nonzero = false;
      for (std::size_t x = 0; x <= static_cast<std::size_t>(F.d); ++x) {
        c[x] = F.forms[i].coeffs[x] * values[j] - F.forms[j].coeffs[x] * values[i];
        nonzero = nonzero || c[x] != 0;
      }
      if (nonzero) minors.emplace_back(F.d, std::move(c));
    }
  }
  if (minors.empty())
    throw invalid_input("parametrization not generically reduced/birational: image is a point");
  return binary_gcd_degree(minors);
}

}  // namespace detail

/// Splitting type of the restricted tangent bundle, recovered from kernel
/// dimensions scanned in increasing degree.  The parametrization must be
/// generically one-to-one onto its image; this is probed at a few sample
/// parameters (the generic fiber degree is the minimum over samples) and a
/// fiber of degree > 1 aborts the computation.
inline SplittingType splitting_from_syzygies(const Parametrization& F) {
  static const std::pair<int, int> samples[] = {{2, 1}, {-3, 2}, {5, 7}};
  int fiber = F.d + 1;
  for (auto [ps, pt] : samples)
    fiber = std::min(fiber, detail::fiber_degree_at(F, Rat(ps), Rat(pt)));
  if (fiber != 1)
    throw invalid_input(
        "parametrization not generically reduced/birational: generic fiber has degree " +
        std::to_string(fiber));

  const Int total_degree = Int(F.n + 1) * F.d;
  std::vector<Int> parts;
  std::vector<Int> scanned;  // syzygy_dim at k = 0, 1, ...
  Int prev_dim = 0;          // no syzygies in negative degree
  Int prev_count = 0;        // parts known to lie at or below the last threshold
  int k = 0;
  for (; k <= (F.n + 1) * F.d; ++k) {
    Int dim = syzygy_dim(F, k);
    scanned.push_back(dim);
    Int count = dim - prev_dim;  // #{i : k_i <= d + k}
    if (count < prev_count || count > F.n)
      throw invalid_input("parametrization not generically reduced/birational");
    for (Int c = prev_count; c < count; ++c) parts.emplace_back(F.d + k);
    prev_dim = dim;
    prev_count = count;
    if (count == F.n) break;
  }
  if (static_cast<int>(parts.size()) != F.n)
    throw invalid_input("parametrization not generically reduced/birational");

  SplittingType st{std::vector<Int>(parts.rbegin(), parts.rend())};
  if (st.degree() != total_degree)
    throw invalid_input("parametrization not generically reduced/birational");
  // Re-check every scanned dimension against the recovered type.
  for (int kk = 0; kk < static_cast<int>(scanned.size()); ++kk) {
    Int predicted = 0;
    for (const Int& part : st.parts) {
      Int term = Int(F.d + kk) - part + 1;
      if (term > 0) predicted += term;
    }
    if (predicted != scanned[static_cast<std::size_t>(kk)])
      throw invalid_input("parametrization not generically reduced/birational");
  }
  return st;
}

/// Parses the parametrization file format: first line "n d", then n+1
/// lines of d+1 rational coefficients (highest s-power first).
inline Parametrization parse_parametrization(std::istream& in, const std::string& origin) {
  auto fail = [&](int line, const std::string& what) -> void {
    throw invalid_input(origin + ", line " + std::to_string(line) + ": " + what);
  };

  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) fail(lineno + 1, "expected header \"n d\"");
  std::istringstream header(line);
  int n = 0, d = 0;
  std::string extra;
  if (!(header >> n >> d) || (header >> extra))
    fail(lineno, "expected header \"n d\"");
  if (n < 1 || d < 1) fail(lineno, "ambient dimension and degree must be positive");

  std::vector<BinaryForm> forms;
  for (int i = 0; i <= n; ++i) {
    if (!next_line()) fail(lineno + 1, "expected " + std::to_string(n + 1) + " coefficient rows");
    std::istringstream row(line);
    std::vector<Rat> coeffs;
    std::string token;
    while (row >> token) {
      try {
        coeffs.push_back(parse_rational(token));
      } catch (const invalid_input& e) {
        fail(lineno, std::string("bad coefficient \"") + token + "\": " + e.what());
      }
    }
    if (coeffs.size() != static_cast<std::size_t>(d) + 1)
      fail(lineno, "expected " + std::to_string(d + 1) + " coefficients, got " +
                       std::to_string(coeffs.size()));
    forms.emplace_back(d, std::move(coeffs));
  }
  if (next_line()) fail(lineno, "unexpected trailing content");
  return Parametrization(n, d, std::move(forms));
}

inline Parametrization load_parametrization(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open parametrization file: " + path);
  return parse_parametrization(in, path);
}

}  // namespace jrc
