#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktcp/truncring.hpp"

using namespace ktcp;
using namespace ktcp::truncring;

namespace {

TruncPoly poly(std::size_t order, std::initializer_list<Rational> cs) {
  std::vector<Rational> v(cs);
  v.resize(order + 1);
  return TruncPoly(order, v);
}

Rational q(long p, long r = 1) { return Rational(p, r); }

// Univariate MultiPoly with the same coefficients.
MultiPoly as_multi(const TruncPoly& p) {
  MultiPoly m(1);
  for (std::size_t k = 0; k <= p.order(); ++k)
    m = m + MultiPoly::monomial({static_cast<unsigned>(k)}, p.coeff(k));
  return m;
}

TruncPoly from_multi(const MultiPoly& m, std::size_t order) {
  TruncPoly p(order);
  for (const auto& [e, c] : m.terms())
    if (e[0] <= order) p = p + TruncPoly::monomial(order, e[0], c);
  return p;
}

TruncPoly random_poly(std::mt19937_64& rng, std::size_t order, bool nilpotent = false) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> cs(order + 1);
  for (auto& c : cs) c = Rational(num(rng), den(rng));
  if (nilpotent) cs[0] = 0;
  return TruncPoly(order, cs);
}

}  // namespace

TEST_CASE("truncated multiplication kills degrees above the order") {
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK((TruncPoly::x(n) * TruncPoly::monomial(n, n)).is_zero());
  CHECK(poly(3, {1, 1}) * poly(3, {1, -1}) == poly(3, {1, 0, -1}));
}

TEST_CASE("(x + x^2/2)^2 in order 3") {
  const TruncPoly p = poly(3, {0, 1, q(1, 2)});
  // Oracle: full expansion in the multivariate engine, then drop degrees > 3.
  const MultiPoly full = as_multi(p) * as_multi(p);
  CHECK(full.coeff({4}) == q(1, 4));
  const TruncPoly oracle = from_multi(full, 3);
  CHECK(p * p == poly(3, {0, 0, 1, 1}));
  CHECK(p * p == oracle);
  CHECK(pow(p, 2) == oracle);
}

TEST_CASE("mismatched orders are rejected") {
  CHECK_THROWS_AS(TruncPoly::x(2) + TruncPoly::x(3), Error);
  CHECK_THROWS_AS(TruncPoly::x(2) * TruncPoly::x(3), Error);
  CHECK_THROWS_AS(TruncPoly(2, {1, 2}), Error);
}

TEST_CASE("exp_nilpotent examples") {
  CHECK(exp_nilpotent(TruncPoly::x(3)) == poly(3, {1, 1, q(1, 2), q(1, 6)}));
  CHECK(exp_nilpotent(TruncPoly(4)) == TruncPoly::constant(4, 1));
  for (std::size_t n = 0; n <= 10; ++n) {
    const TruncPoly gamma = exp_nilpotent(TruncPoly::x(n)) - TruncPoly::constant(n, 1);
    CHECK(pow(gamma, n + 1).is_zero());
    if (n >= 1) CHECK_FALSE(pow(gamma, n).is_zero());
  }
  CHECK_THROWS_AS(exp_nilpotent(TruncPoly::constant(2, 1)), Error);
}

TEST_CASE("exp_nilpotent matches Taylor coefficients 1/k!") {
  const TruncPoly e = exp_nilpotent(TruncPoly::x(12));
  BigInt fact = 1;
  for (unsigned long k = 0; k <= 12; ++k) {
    if (k > 0) fact *= k;
    CHECK(e.coeff(k) == Rational(BigInt(1), fact));
  }
}

TEST_CASE("property: ring axioms on random truncated polynomials") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 9;
    const TruncPoly a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(a * TruncPoly::constant(n, 1) == a);
  }
}

TEST_CASE("property: exp of a sum is the product of exps") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 9;
    const TruncPoly p = random_poly(rng, n, true), r = random_poly(rng, n, true);
    CHECK(exp_nilpotent(p) * exp_nilpotent(r) == exp_nilpotent(p + r));
  }
}

TEST_CASE("pow by squaring agrees with repeated multiplication") {
  std::mt19937_64 rng(47);
  const TruncPoly p = random_poly(rng, 6);
  TruncPoly acc = TruncPoly::constant(6, 1);
  for (std::size_t k = 0; k <= 9; ++k) {
    CHECK(pow(p, k) == acc);
    acc = acc * p;
  }
}

TEST_CASE("pairing matrix") {
  CHECK(pairing_matrix(0) == exactalg::IntegerMatrix::from_rows({{1}}));
  CHECK(pairing_matrix(1) == exactalg::IntegerMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(pairing_matrix(4) == exactalg::IntegerMatrix::from_rows(
                                 {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}}));
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(exactalg::is_isomorphism(pairing_matrix(n)));
    CHECK(abs(exactalg::determinant(pairing_matrix(n))) == 1);
  }
}

TEST_CASE("truncated polynomial notation") {
  CHECK(TruncPoly(3).to_string() == "0");
  CHECK(poly(3, {0, 1, q(1, 2), q(1, 6)}).to_string() == "x + 1/2*x^2 + 1/6*x^3");
  CHECK(poly(2, {1, 0, -1}).to_string() == "1 - x^2");
  CHECK(poly(2, {-2, -1, q(-3, 4)}).to_string() == "-2 - x - 3/4*x^2");
  CHECK(parse_trunc_poly("1+2x+x^2", 2) == poly(2, {1, 2, 1}));
  CHECK(parse_trunc_poly("1 + 2*x + x^2", 4) == poly(4, {1, 2, 1}));
  CHECK(parse_trunc_poly("x^5 - x", 3) == poly(3, {0, -1}));
  CHECK(parse_trunc_poly("-1/2*x + 3/6", 1) == poly(1, {q(1, 2), q(-1, 2)}));
  CHECK_THROWS_AS(parse_trunc_poly("", 2), Error);
  CHECK_THROWS_AS(parse_trunc_poly("1 +", 2), Error);
  CHECK_THROWS_AS(parse_trunc_poly("y", 2), Error);
  CHECK_THROWS_AS(parse_trunc_poly("1/0", 2), Error);
  CHECK_THROWS_AS(parse_trunc_poly("2 3", 2), Error);
}

TEST_CASE("property: truncated polynomial notation round-trips") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 9;
    const TruncPoly p = random_poly(rng, n);
    CHECK(parse_trunc_poly(p.to_string(), n) == p);
  }
}

TEST_CASE("symmetric polynomial examples") {
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  CHECK(elementary_symmetric(1, 2) == x1 + x2);
  CHECK(elementary_symmetric(2, 2) == x1 * x2);
  CHECK(power_sum(2, 2) == x1 * x1 + x2 * x2);
  CHECK(elementary_symmetric(3, 2).is_zero());
  CHECK(elementary_symmetric(0, 3) == MultiPoly::constant(3, 1));
  CHECK(elementary_symmetric(2, 4).terms().size() == 6);
  CHECK(power_sum(2, 2).to_string() == "x1^2 + x2^2");
}

TEST_CASE("multivariate arithmetic and printing") {
  const MultiPoly a = MultiPoly::variable(3, 0), b = MultiPoly::variable(3, 1), c = MultiPoly::variable(3, 2);
  const MultiPoly s = pow(a, 3) - (a * b).scaled(3) + c.scaled(3);
  CHECK(s.to_string("e") == "e1^3 - 3*e1*e2 + 3*e3");
  CHECK(s.total_degree() == 3);
  CHECK((s - s).is_zero());
  CHECK(MultiPoly(2).to_string() == "0");
  CHECK(MultiPoly::constant(1, q(-1, 2)).to_string() == "-1/2");
  CHECK_THROWS_AS(a + MultiPoly::variable(2, 0), Error);
  CHECK(((a + b) * (a - b)).truncated(1).is_zero());
}

TEST_CASE("property: substitution agrees with direct evaluation") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    // p in 3 variables, substituted with polynomials in 2 variables.
    MultiPoly p(3);
    for (int t = 0; t < 5; ++t)
      p = p + MultiPoly::monomial({static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3),
                                   static_cast<unsigned>(rng() % 3)},
                                  small(rng));
    std::vector<MultiPoly> vals;
    for (int v = 0; v < 3; ++v)
      vals.push_back(MultiPoly::variable(2, 0).scaled(small(rng)) + MultiPoly::variable(2, 1).scaled(small(rng)) +
                     MultiPoly::constant(2, small(rng)));
    const MultiPoly composed = substitute(p, vals);
    for (int pt = 0; pt < 5; ++pt) {
      const std::vector<Rational> point{Rational(small(rng)), Rational(small(rng), 2)};
      std::vector<Rational> inner;
      for (const auto& v : vals) inner.push_back(evaluate(v, point));
      CHECK(evaluate(composed, point) == evaluate(p, inner));
    }
  }
}

TEST_CASE("evaluation in the truncated ring") {
  // p(a, b) = a^2 + 3b at a = x, b = 1 + x in order 2: 3 + 3x + x^2.
  const MultiPoly p = pow(MultiPoly::variable(2, 0), 2) + MultiPoly::variable(2, 1).scaled(3);
  const std::vector<TruncPoly> vals{TruncPoly::x(2), poly(2, {1, 1})};
  CHECK(evaluate(p, vals) == poly(2, {3, 3, 1}));
}
