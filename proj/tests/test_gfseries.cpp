#include <map>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "invseq/gfseries.hpp"

using namespace invseq;

namespace {

// Naive untruncated polynomial oracle, keyed by (u-degree, z-degree).
using Poly = std::map<std::pair<int, int>, long>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [da, ca] : a) {
    for (const auto& [db, cb] : b) {
      out[{da.first + db.first, da.second + db.second}] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

// u -> u(1+z-uz), computed term by term with no truncation.
Poly poly_substitute(const Poly& p) {
  const Poly expr{{{1, 0}, 1}, {{1, 1}, 1}, {{2, 1}, -1}};  // u + uz - u^2 z
  Poly out;
  for (const auto& [deg, c] : p) {
    Poly power{{{0, deg.second}, c}};  // carries the z-part and coefficient
    for (int i = 0; i < deg.first; ++i) power = poly_mul(power, expr);
    for (const auto& [d2, c2] : power) out[d2] += c2;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

TEST_CASE("kernel substitution expands u(1+z-uz)") {
  BivariateSeries v0 = BivariateSeries::monomial(1, 0, 1, 8, 8);
  BivariateSeries v1 = substitute_u(v0);
  CHECK(v1.coeff(1, 0) == 1);
  CHECK(v1.coeff(1, 1) == 1);
  CHECK(v1.coeff(2, 1) == -1);
  CHECK(v1.terms().size() == 3);

  // Dropping all z-terms leaves any series in u alone fixed.
  BivariateSeries s(8, 8);
  s.add_term(2, 0, 5);
  s.add_term(3, 1, 1);
  BivariateSeries t = substitute_u(s);
  CHECK(t.coeff(2, 0) == 5);
  CHECK(t.coeff(3, 0) == 0);

  // V^2 against the untruncated oracle.
  Poly oracle = poly_substitute(poly_substitute(Poly{{{1, 0}, 1}}));
  BivariateSeries v2 = substitute_u(v1);
  for (const auto& [deg, c] : oracle) {
    if (deg.first <= 8 && deg.second <= 8) {
      CHECK(v2.coeff(deg.first, deg.second) == c);
    }
  }
  CHECK(v2.coeff(2, 1) == -2);
  CHECK(v2.coeff(3, 2) == 2);
}

TEST_CASE("series arithmetic stays exact under the caps") {
  BivariateSeries a = BivariateSeries::monomial(1, 1, 3, 5, 5);
  BivariateSeries b = BivariateSeries::monomial(2, 3, -2, 5, 5);
  BivariateSeries prod = a * b;
  CHECK(prod.coeff(3, 4) == -6);
  CHECK((a + b - a - b).is_zero());
  CHECK((a * b).min_z_degree() == 4);
  CHECK(BivariateSeries(4, 4).min_z_degree() == 5);
  CHECK_THROWS_AS(BivariateSeries(-1, 3), std::invalid_argument);

  // Terms past the caps vanish silently.
  BivariateSeries c(2, 2);
  c.add_term(5, 5, 7);
  CHECK(c.is_zero());
}

TEST_CASE("g_expand matches the displayed expansion") {
  BivariateSeries g = g_expand(10, 12);

  // u-degree 1: the single term u.
  for (int n = 0; n <= 10; ++n) {
    CHECK(g.coeff(1, n) == (n == 0 ? 1 : 0));
  }
  // u^2: z, u^3: (z+2)z^2, u^4: (z^3+5z^2+9z+5)z^3.
  CHECK(g.coeff(2, 1) == 1);
  CHECK(g.coeff(3, 2) == 2);
  CHECK(g.coeff(3, 3) == 1);
  CHECK(g.coeff(4, 3) == 5);
  CHECK(g.coeff(4, 4) == 9);
  CHECK(g.coeff(4, 5) == 5);
  CHECK(g.coeff(4, 6) == 1);
  // u^5: (z^6+9z^5+35z^4+75z^3+92z^2+59z+14)z^4.
  std::vector<long> u5{14, 59, 92, 75, 35, 9, 1};
  for (int i = 0; i < 7; ++i) {
    CHECK(g.coeff(5, 4 + i) == u5[static_cast<std::size_t>(i)]);
  }

  // Counting series: all coefficients nonnegative.
  for (const auto& term : g.terms()) CHECK(term.coeff >= 0);

  CHECK_THROWS_AS(g_expand(6, 5), std::invalid_argument);
}

TEST_CASE("a_series equals the (10)0 counting sequence") {
  std::vector<BigInt> a = a_series(10);
  std::vector<BigInt> expected{1,    1,    2,     6,      23,    106,
                               567,  3440, 23286, 173704, 1414102};
  CHECK(a == expected);

  // Independent check against exhaustive enumeration for small n.
  VincularPattern p = VincularPattern::parse("(10)0");
  for (int n = 1; n <= 4; ++n) {
    std::int64_t brute = 0;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) {
      if (avoids(p, e)) ++brute;
    });
    CHECK(a[static_cast<std::size_t>(n)] == brute);
  }
}

TEST_CASE("support constraint k-1 <= n <= C(k,2)") {
  CHECK(!support_check(g_expand(6, 8)));

  BivariateSeries bad1 = BivariateSeries::monomial(2, 5, 1, 8, 8);
  auto violation1 = support_check(bad1);
  REQUIRE(violation1.has_value());
  CHECK(violation1->u_deg == 2);
  CHECK(violation1->z_deg == 5);

  BivariateSeries bad2 = BivariateSeries::monomial(4, 2, 1, 8, 8);
  CHECK(support_check(bad2).has_value());
}

TEST_CASE("functional equation residual vanishes") {
  const int N = 8;
  const int K = N + 2;
  BivariateSeries g = g_expand(N, K).resized(N, 2 * K + 2);
  BivariateSeries u = BivariateSeries::monomial(1, 0, 1, N, 2 * K + 2);
  BivariateSeries u2 = BivariateSeries::monomial(2, 0, 1, N, 2 * K + 2);
  BivariateSeries residual = g - u + u2 - u * substitute_u(g);
  CHECK(residual.is_zero());
}

TEST_CASE("expansion and fixed-point iteration agree") {
  const int N = 10;
  const int K = N + 2;
  BivariateSeries expansion = g_expand(N, K);

  BivariateSeries iterate(N, K);
  BivariateSeries u = BivariateSeries::monomial(1, 0, 1, N, K);
  BivariateSeries u2 = BivariateSeries::monomial(2, 0, 1, N, K);
  // Each round multiplies the error by u, so K+2 rounds pin everything
  // below the caps.
  for (int i = 0; i < K + 2; ++i) {
    iterate = u - u2 + u * substitute_u(iterate);
  }
  BivariateSeries once_more = u - u2 + u * substitute_u(iterate);
  CHECK((once_more - iterate).is_zero());
  CHECK((iterate - expansion).is_zero());
}
