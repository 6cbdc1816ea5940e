#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "jrc/syzygy.hpp"

using jrc::BinaryForm;
using jrc::Int;
using jrc::Parametrization;
using jrc::Rat;
using jrc::SplittingType;

namespace {

BinaryForm monomial(int degree, int t_power, long long scale = 1) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(degree) + 1, Rat(0));
  coeffs[static_cast<std::size_t>(t_power)] = scale;
  return BinaryForm(degree, std::move(coeffs));
}

Parametrization conic() { return Parametrization(2, 2, {monomial(2, 0), monomial(2, 1), monomial(2, 2)}); }

Parametrization jumping_quartic() {
  // (s^4, s^3 t, t^4)
  return Parametrization(2, 4, {monomial(4, 0), monomial(4, 1), monomial(4, 4)});
}

Parametrization twisted_cubic() {
  return Parametrization(3, 3, {monomial(3, 0), monomial(3, 1), monomial(3, 2), monomial(3, 3)});
}

// Test-side polynomial check that a claimed syzygy really annihilates the
// forms: multiply out sum g_i f_i coefficientwise.
bool is_syzygy(const Parametrization& F, const std::vector<BinaryForm>& g) {
  REQUIRE(g.size() == F.forms.size());
  int out_deg = F.d + g.front().degree;
  std::vector<Rat> acc(static_cast<std::size_t>(out_deg) + 1, Rat(0));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int x = 0; x <= F.d; ++x)
      for (int y = 0; y <= g[i].degree; ++y)
        acc[static_cast<std::size_t>(x + y)] +=
            F.forms[i].coeffs[static_cast<std::size_t>(x)] *
            g[i].coeffs[static_cast<std::size_t>(y)];
  for (const Rat& c : acc)
    if (c != 0) return false;
  return true;
}

SplittingType st(std::vector<long long> parts) {
  std::vector<Int> v(parts.begin(), parts.end());
  return SplittingType(std::move(v));
}

std::mt19937& rng() {
  static std::mt19937 gen(75209);
  return gen;
}

Parametrization random_parametrization(int n, int d) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 4);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<BinaryForm> forms;
    for (int i = 0; i <= n; ++i) {
      std::vector<Rat> coeffs;
      for (int j = 0; j <= d; ++j) coeffs.emplace_back(num(rng()), den(rng()));
      forms.emplace_back(d, std::move(coeffs));
    }
    try {
      return Parametrization(n, d, std::move(forms));
    } catch (const jrc::invalid_input&) {
      // basepoint or degenerate draw; retry
    }
  }
  FAIL("could not draw a valid random parametrization");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("syzygy dimensions of the conic") {
  Parametrization F = conic();
  CHECK(jrc::syzygy_dim(F, 0) == 0);
  CHECK(jrc::syzygy_dim(F, 1) == 2);
  CHECK_THROWS_AS(jrc::syzygy_dim(F, -1), jrc::invalid_input);

  // The two independent linear syzygies, verified by multiplication.
  CHECK(is_syzygy(F, {monomial(1, 1), monomial(1, 0, -1), monomial(1, 0, 0)}));
  CHECK(is_syzygy(F, {monomial(1, 0, 0), monomial(1, 1), monomial(1, 0, -1)}));
}

TEST_CASE("syzygy dimensions of the jumping quartic") {
  Parametrization F = jumping_quartic();
  CHECK(jrc::syzygy_dim(F, 0) == 0);
  CHECK(jrc::syzygy_dim(F, 1) == 1);
  CHECK(is_syzygy(F, {monomial(1, 1), monomial(1, 0, -1), monomial(1, 0, 0)}));
}

TEST_CASE("jumping tests") {
  CHECK_FALSE(jrc::is_jumping_tangent(conic()));
  CHECK(jrc::is_jumping_tangent(jumping_quartic()));
  CHECK_FALSE(jrc::is_jumping_tangent(twisted_cubic()));

  // Plane cubic: 2 does not divide 3.
  Parametrization cubic(2, 3, {monomial(3, 0), monomial(3, 1), monomial(3, 3)});
  CHECK_THROWS_AS(jrc::is_jumping_tangent(cubic), jrc::invalid_input);
}

TEST_CASE("splitting types from syzygies") {
  CHECK(jrc::splitting_from_syzygies(conic()) == st({3, 3}));
  CHECK(jrc::splitting_from_syzygies(jumping_quartic()) == st({7, 5}));
  CHECK(jrc::splitting_from_syzygies(twisted_cubic()) == st({4, 4, 4}));
}

TEST_CASE("surjectivity of the multiplication map") {
  CHECK(jrc::surjective_at(conic(), 1));
  CHECK_FALSE(jrc::surjective_at(jumping_quartic(), 1));
  // In degree d + d/n - 2 the map can never be onto.
  CHECK_FALSE(jrc::surjective_at(jumping_quartic(), 0));
}

TEST_CASE("jumping is failure of surjectivity in the critical degree") {
  // For plane quartics the source and target of the degree d/n - 1
  // multiplication map both have dimension 6, so a kernel exists exactly
  // when the map fails to be onto.
  CHECK(jrc::is_jumping_tangent(jumping_quartic()) ==
        !jrc::surjective_at(jumping_quartic(), 1));
  for (int trial = 0; trial < 10; ++trial) {
    Parametrization F = random_parametrization(2, 4);
    CAPTURE(trial);
    REQUIRE(jrc::is_jumping_tangent(F) == !jrc::surjective_at(F, 1));
  }
}

TEST_CASE("rank-nullity bookkeeping on random parametrizations") {
  for (auto [n, d] : {std::pair{2, 2}, {2, 4}, {3, 3}}) {
    Parametrization F = random_parametrization(n, d);
    for (int k = 0; k <= 3; ++k) {
      Int dim = jrc::syzygy_dim(F, k);
      Int rank = Int((n + 1) * (k + 1)) - dim;
      CAPTURE(n, d, k);
      REQUIRE(rank >= 0);
      REQUIRE(rank <= d + k + 1);
      REQUIRE((rank == d + k + 1) == jrc::surjective_at(F, k));
    }
  }
}

TEST_CASE("every curve admits a syzygy one degree above the jumping bound") {
  for (auto [n, d] : {std::pair{2, 2}, {2, 4}, {3, 3}}) {
    for (int trial = 0; trial < 20; ++trial) {
      Parametrization F = random_parametrization(n, d);
      CAPTURE(n, d, trial);
      REQUIRE(jrc::syzygy_dim(F, d / n) > 0);
    }
  }
}

TEST_CASE("syzygy dimension differences are monotone counts") {
  for (auto [n, d] : {std::pair{2, 4}, {3, 3}}) {
    Parametrization F = random_parametrization(n, d);
    Int prev_dim = 0, prev_diff = 0;
    for (int k = 0; k <= 4; ++k) {
      Int dim = jrc::syzygy_dim(F, k);
      Int diff = dim - prev_dim;
      CAPTURE(n, d, k);
      REQUIRE(diff >= prev_diff);
      REQUIRE(diff <= n);
      prev_dim = dim;
      prev_diff = diff;
    }
  }
}

TEST_CASE("scaling forms and changing basis leave the analysis invariant") {
  Parametrization F = random_parametrization(2, 4);
  Int base_dim = jrc::syzygy_dim(F, 1);
  SplittingType base_split = jrc::splitting_from_syzygies(F);
  bool base_jump = jrc::is_jumping_tangent(F);

  SECTION("rescaling one form") {
    std::vector<BinaryForm> forms = F.forms;
    for (Rat& c : forms[1].coeffs) c *= Rat(-7, 3);
    Parametrization scaled(2, 4, std::move(forms));
    CHECK(jrc::syzygy_dim(scaled, 1) == base_dim);
    CHECK(jrc::splitting_from_syzygies(scaled) == base_split);
    CHECK(jrc::is_jumping_tangent(scaled) == base_jump);
  }

  SECTION("substituting (s, t) -> (s + 2t, -s + t)") {
    // Binomial expansion of f(s + 2t, -s + t), coefficient by coefficient.
    std::vector<BinaryForm> forms;
    for (const BinaryForm& f : F.forms) {
      std::vector<Rat> out(static_cast<std::size_t>(f.degree) + 1, Rat(0));
      for (int j = 0; j <= f.degree; ++j) {
        // (s + 2t)^(d-j) (-s + t)^j
        std::vector<Rat> term{Rat(1)};
        auto mul_linear = [&term](const Rat& cs, const Rat& ct) {
          std::vector<Rat> next(term.size() + 1, Rat(0));
          for (std::size_t x = 0; x < term.size(); ++x) {
            next[x] += term[x] * cs;
            next[x + 1] += term[x] * ct;
          }
          term = std::move(next);
        };
        for (int e = 0; e < f.degree - j; ++e) mul_linear(Rat(1), Rat(2));
        for (int e = 0; e < j; ++e) mul_linear(Rat(-1), Rat(1));
        for (std::size_t x = 0; x < term.size(); ++x)
          out[x] += f.coeffs[static_cast<std::size_t>(j)] * term[x];
      }
      forms.emplace_back(f.degree, std::move(out));
    }
    Parametrization moved(2, 4, std::move(forms));
    CHECK(jrc::syzygy_dim(moved, 1) == base_dim);
    CHECK(jrc::splitting_from_syzygies(moved) == base_split);
    CHECK(jrc::is_jumping_tangent(moved) == base_jump);
  }
}

TEST_CASE("basepoints are rejected at construction") {
  // All three forms vanish at (0:1).
  CHECK_THROWS_AS(Parametrization(2, 2, {monomial(2, 0), monomial(2, 1), monomial(2, 1, 3)}),
                  jrc::invalid_input);
  // Common factor s - t, so (1:1) is a basepoint.
  BinaryForm f0(2, {Rat(1), Rat(-1), Rat(0)});   // s(s - t)
  BinaryForm f1(2, {Rat(0), Rat(1), Rat(-1)});   // t(s - t)
  BinaryForm f2(2, {Rat(1), Rat(0), Rat(-1)});   // (s - t)(s + t)
  CHECK_THROWS_AS(Parametrization(2, 2, {f0, f1, f2}), jrc::invalid_input);
}

TEST_CASE("non-birational parametrizations are caught") {
  // (s^4, s^2 t^2, t^4): a double cover of the conic.
  Parametrization doubled(2, 4, {monomial(4, 0), monomial(4, 2), monomial(4, 4)});
  CHECK_THROWS_WITH(jrc::splitting_from_syzygies(doubled),
                    Catch::Matchers::ContainsSubstring("not generically reduced/birational"));

  // (s^2, 0, t^2): a double cover of a line.
  BinaryForm zero(2, {Rat(0), Rat(0), Rat(0)});
  Parametrization double_line(2, 2, {monomial(2, 0), zero, monomial(2, 2)});
  CHECK_THROWS_WITH(jrc::splitting_from_syzygies(double_line),
                    Catch::Matchers::ContainsSubstring("not generically reduced/birational"));
}

TEST_CASE("parametrization files parse with diagnostics") {
  SECTION("round trip") {
    std::istringstream in("2 2\n1 0 0\n0 1 0\n0 0 1\n");
    Parametrization F = jrc::parse_parametrization(in, "inline");
    CHECK(F.n == 2);
    CHECK(F.d == 2);
    CHECK(jrc::splitting_from_syzygies(F) == st({3, 3}));
  }

  SECTION("rational coefficients") {
    std::istringstream in("2 2\n1/2 0 0\n0 -3/7 0\n0 0 5\n");
    Parametrization F = jrc::parse_parametrization(in, "inline");
    CHECK(F.forms[1].coeffs[1] == Rat(-3, 7));
  }

  SECTION("bad header") {
    std::istringstream in("two 2\n");
    CHECK_THROWS_WITH(jrc::parse_parametrization(in, "inline"),
                      Catch::Matchers::ContainsSubstring("line 1"));
  }

  SECTION("wrong coefficient count") {
    std::istringstream in("2 2\n1 0 0\n0 1\n0 0 1\n");
    CHECK_THROWS_WITH(jrc::parse_parametrization(in, "inline"),
                      Catch::Matchers::ContainsSubstring("line 3"));
  }

  SECTION("bad token") {
    std::istringstream in("2 2\n1 0 0\n0 x 0\n0 0 1\n");
    CHECK_THROWS_WITH(jrc::parse_parametrization(in, "inline"),
                      Catch::Matchers::ContainsSubstring("bad coefficient"));
  }

  SECTION("trailing content") {
    std::istringstream in("2 2\n1 0 0\n0 1 0\n0 0 1\nleftover\n");
    CHECK_THROWS_AS(jrc::parse_parametrization(in, "inline"), jrc::invalid_input);
  }
}
