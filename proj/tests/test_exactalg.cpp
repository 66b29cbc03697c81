#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "ktcp/exactalg.hpp"
#include "test_support.hpp"

using namespace ktcp;
using namespace ktcp::exactalg;
using ktcp::testing::big_vector;

namespace {

void check_smith_invariants(const IntegerMatrix& a, const SmithForm& s) {
  REQUIRE(s.u.rows() == a.rows());
  REQUIRE(s.v.rows() == a.cols());
  CHECK(s.u * a * s.v == s.diagonal_matrix());
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    CHECK(s.d[i] > 0);
    if (i > 0) CHECK(s.d[i] % s.d[i - 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith_normal_form of the identity is trivial") {
  const auto s = smith_normal_form(IntegerMatrix::identity(2));
  CHECK(s.d == big_vector({1, 1}));
  CHECK(s.u == IntegerMatrix::identity(2));
  CHECK(s.v == IntegerMatrix::identity(2));
}

TEST_CASE("smith_normal_form of a zero matrix has no invariant factors") {
  const auto s = smith_normal_form(IntegerMatrix(2, 3));
  CHECK(s.d.empty());
  CHECK(s.u == IntegerMatrix::identity(2));
  CHECK(s.v == IntegerMatrix::identity(3));
}

TEST_CASE("smith_normal_form of [[2,4],[6,8]] is diag(2,4)") {
  const auto a = IntegerMatrix::from_rows({{2, 4}, {6, 8}});
  // Oracle: gcd of 1x1 minors is 2, |det| = 8, so d = (2, 8/2).
  const auto oracle = ktcp::testing::determinant_divisor_factors({{2, 4}, {6, 8}}, 2);
  REQUIRE(oracle == std::vector<std::int64_t>{2, 4});
  const auto s = smith_normal_form(a);
  CHECK(s.d == big_vector({2, 4}));
  check_smith_invariants(a, s);
}

TEST_CASE("smith_normal_form handles empty shapes") {
  for (auto [r, c] : {std::pair{0, 0}, {0, 3}, {3, 0}}) {
    const IntegerMatrix a(r, c);
    const auto s = smith_normal_form(a);
    CHECK(s.d.empty());
    check_smith_invariants(a, s);
  }
}

TEST_CASE("smith_normal_form absorbs negative pivots into v") {
  const auto a = IntegerMatrix::from_rows({{-3}});
  const auto s = smith_normal_form(a);
  CHECK(s.d == big_vector({3}));
  CHECK(s.v == IntegerMatrix::from_rows({{-1}}));
  CHECK(s.u == IntegerMatrix::identity(1));
}

TEST_CASE("smith_normal_form survives entry growth beyond 64 bits") {
  IntegerMatrix a(3, 3);
  const BigInt big("123456789012345678901234567890");
  a(0, 0) = big;
  a(0, 1) = big + 1;
  a(1, 1) = big * big;
  a(2, 0) = 7;
  a(2, 2) = -big;
  const auto s = smith_normal_form(a);
  check_smith_invariants(a, s);
  BigInt prod = 1;
  for (const auto& d : s.d) prod *= d;
  CHECK(prod == abs(determinant(a)));
}

TEST_CASE("property: random matrices satisfy the Smith invariants and the minors oracle") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const auto small = ktcp::testing::random_small(rng, r, c, -9, 9);
    const auto a = ktcp::testing::to_big(small, c);
    const auto s = smith_normal_form(a);
    check_smith_invariants(a, s);
    const auto oracle = ktcp::testing::determinant_divisor_factors(small, c);
    REQUIRE(oracle.size() == s.d.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(s.d[i] == static_cast<long>(oracle[i]));
  }
}

TEST_CASE("property: invariant factors are unchanged by unimodular changes of basis") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const auto a = ktcp::testing::to_big(ktcp::testing::random_small(rng, r, c, -9, 9), c);
    const auto p = ktcp::testing::random_unimodular(rng, r);
    const auto q = ktcp::testing::random_unimodular(rng, c);
    CHECK(smith_normal_form(p * a * q).d == smith_normal_form(a).d);
  }
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(IntegerMatrix::from_rows({{2}})) == FgAbelianGroup(0, big_vector({2})));
  CHECK(cokernel(IntegerMatrix(0, 3)) == FgAbelianGroup::free(3));

  // Oracle: enumerate Z^2 / <(2,0),(0,3)> explicitly.
  const ktcp::testing::FiniteQuotient q({{2, 0}, {0, 3}});
  REQUIRE(q.order() == 6);
  REQUIRE(q.killed_by(6) == 6);
  REQUIRE(q.killed_by(2) == 2);
  REQUIRE(q.killed_by(3) == 3);
  const auto g = cokernel(IntegerMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(g == FgAbelianGroup(0, big_vector({6})));
}

TEST_CASE("cokernel free rank is cols minus rank") {
  const auto a = IntegerMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto g = cokernel(a);
  CHECK(g.free_rank() == 2);
  CHECK(g.torsion().empty());
}

TEST_CASE("property: finite cokernels agree with quotient enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = dim(rng);
    const int bound = n <= 2 ? 9 : 3;
    const auto small = ktcp::testing::random_small(rng, n, n, -bound, bound);
    const auto det = ktcp::testing::cofactor_det(small);
    if (det == 0 || std::abs(det) > 1000) continue;
    ++checked;
    const ktcp::testing::FiniteQuotient q(small);
    const auto g = cokernel(ktcp::testing::to_big(small, n));
    REQUIRE(g.order().has_value());
    CHECK(*g.order() == static_cast<long>(q.order()));
    for (std::int64_t m = 1; m <= std::abs(det); ++m)
      if (std::abs(det) % m == 0) CHECK(q.killed_by(m) == ktcp::testing::killed_by_from_torsion(g, m));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(IntegerMatrix::identity(3)).cols() == 0);

  const auto k0 = kernel_basis(IntegerMatrix(2, 2));
  CHECK(k0.cols() == 2);
  CHECK(is_isomorphism(k0));

  const auto a = IntegerMatrix::from_rows({{1, 1}});
  const auto k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), k(0, 0).get_mpz_t(), k(1, 0).get_mpz_t());
  CHECK(g == 1);
  CHECK(k(0, 0) == -k(1, 0));
}

TEST_CASE("property: kernel bases are primitive and independent") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    const auto a = ktcp::testing::to_big(ktcp::testing::random_small(rng, r, c, -4, 4), c);
    const auto k = kernel_basis(a);
    CHECK(k.cols() == c - rank(a));
    CHECK((a * k).is_zero());
    // Independent and saturated: the Smith form of k is all ones.
    const auto s = smith_normal_form(k);
    CHECK(s.rank() == k.cols());
    for (const auto& d : s.d) CHECK(d == 1);
  }
}

TEST_CASE("solve finds integer solutions and rejects rational-only ones") {
  const auto a = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
  const auto x = solve(a, big_vector({4, 9}));
  REQUIRE(x);
  CHECK(a.apply(*x) == big_vector({4, 9}));
  CHECK_FALSE(solve(a, big_vector({1, 0})));
  CHECK_FALSE(solve(IntegerMatrix::from_rows({{1, 1}, {1, 1}}), big_vector({1, 2})));
}

TEST_CASE("is_isomorphism examples") {
  CHECK(is_isomorphism(IntegerMatrix::identity(4)));
  const auto shear = IntegerMatrix::from_rows({{1, 1}, {0, 1}});
  // Cofactor expansion: 1*1 - 1*0 = 1.
  REQUIRE(ktcp::testing::cofactor_det({{1, 1}, {0, 1}}) == 1);
  CHECK(is_isomorphism(shear));
  CHECK_FALSE(is_isomorphism(IntegerMatrix::from_rows({{2}})));
  CHECK_FALSE(is_isomorphism(IntegerMatrix(2, 3)));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto small = ktcp::testing::random_small(rng, n, n, -9, 9);
      CHECK(determinant(ktcp::testing::to_big(small, n)) ==
            static_cast<long>(ktcp::testing::cofactor_det(small)));
    }
}

TEST_CASE("groups_equal examples") {
  CHECK(groups_equal(FgAbelianGroup::free(2), FgAbelianGroup::free(2)));
  CHECK_FALSE(groups_equal(FgAbelianGroup(0, big_vector({2, 4})), FgAbelianGroup(0, big_vector({8}))));
  CHECK(groups_equal(cokernel(IntegerMatrix::from_rows({{2, 0}, {0, 3}})),
                     FgAbelianGroup(0, big_vector({6}))));
}

TEST_CASE("FgAbelianGroup rejects non-normal data") {
  CHECK_THROWS_AS(FgAbelianGroup(0, big_vector({4, 2})), Error);
  CHECK_THROWS_AS(FgAbelianGroup(0, big_vector({1})), Error);
}

TEST_CASE("group notation") {
  CHECK(FgAbelianGroup::trivial().to_string() == "0");
  CHECK(FgAbelianGroup::free(1).to_string() == "Z");
  CHECK(FgAbelianGroup::free(5).to_string() == "Z^5");
  CHECK(FgAbelianGroup(2, big_vector({2, 4})).to_string() == "Z^2 ⊕ Z/2 ⊕ Z/4");
  CHECK(FgAbelianGroup(0, big_vector({3})).to_string() == "Z/3");
  CHECK(parse_group("Z/2 ⊕ Z/3") == FgAbelianGroup(0, big_vector({6})));
  CHECK(parse_group(" Z ⊕ Z ") == FgAbelianGroup::free(2));
  CHECK_THROWS_AS(parse_group("Q"), Error);
  CHECK_THROWS_AS(parse_group("Z/1"), Error);
}

TEST_CASE("property: group notation round-trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = rng() % 4;
    const auto rel = ktcp::testing::to_big(ktcp::testing::random_small(rng, r, r, -6, 6), r);
    const auto g = direct_sum(cokernel(rel), FgAbelianGroup::free(rng() % 3));
    CHECK(parse_group(g.to_string()) == g);
  }
}

TEST_CASE("direct_sum renormalizes torsion") {
  const auto g = direct_sum(FgAbelianGroup(0, big_vector({2})), FgAbelianGroup(1, big_vector({3})));
  CHECK(g == FgAbelianGroup(1, big_vector({6})));
  const auto h = direct_sum(FgAbelianGroup(0, big_vector({2, 4})), FgAbelianGroup(0, big_vector({2})));
  CHECK(h == FgAbelianGroup(0, big_vector({2, 2, 4})));
}

TEST_CASE("group element arithmetic") {
  const FgAbelianGroup g(1, big_vector({4}));
  const auto a = g.normalize(big_vector({3, 7}));
  CHECK(a == big_vector({3, 3}));
  CHECK(g.add(a, g.negate(a)) == g.zero());
  CHECK(g.scale(4, g.generator(1)) == g.zero());
  CHECK(g.is_element(big_vector({-2, 3})));
  CHECK_FALSE(g.is_element(big_vector({0, 4})));
}

TEST_CASE("presented groups carry normal-form coordinates") {
  // <a, b | 2a + 4b, 6a + 8b> = Z/2 ⊕ Z/4
  const PresentedGroup pg(Presentation(2, IntegerMatrix::from_rows({{2, 4}, {6, 8}})));
  CHECK(pg.group() == FgAbelianGroup(0, big_vector({2, 4})));
  CHECK(pg.coordinates(big_vector({2, 4})) == pg.group().zero());
  CHECK(pg.coordinates(big_vector({6, 8})) == pg.group().zero());
  for (std::size_t k = 0; k < pg.group().coordinate_count(); ++k) {
    const auto e = pg.group().generator(k);
    CHECK(pg.coordinates(pg.representative(e)) == e);
  }
  // Coordinates are additive.
  const auto x = big_vector({1, 3}), y = big_vector({5, -2});
  CHECK(pg.coordinates(big_vector({6, 1})) ==
        pg.group().add(pg.coordinates(x), pg.coordinates(y)));
}

TEST_CASE("group homomorphisms check torsion compatibility") {
  const FgAbelianGroup z2(0, big_vector({2})), z4(0, big_vector({4}));
  const GroupHomomorphism doubling(z2, z4, {big_vector({2})});
  CHECK(doubling.apply(big_vector({1})) == big_vector({2}));
  CHECK_THROWS_AS(GroupHomomorphism(z2, z4, {big_vector({1})}), Error);
}

TEST_CASE("matrix text format") {
  const auto m = parse_matrix("2 3\n1 -2 3\n0 0 12345678901234567890\n");
  CHECK(m.rows() == 2);
  CHECK(m(1, 2) == BigInt("12345678901234567890"));
  CHECK(parse_matrix(format_matrix(m)) == m);
  CHECK(parse_matrix("0 3").cols() == 3);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2 3"), Error);
  CHECK_THROWS_AS(parse_matrix("1 1\n1 2"), Error);
  CHECK_THROWS_AS(parse_matrix("1 1\nx"), Error);
}
