#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "ktcp/grothendieck.hpp"
#include "test_support.hpp"

using namespace ktcp;
using namespace ktcp::grothendieck;
using ktcp::testing::CayleyTable;
using ktcp::testing::big_vector;

namespace {

// {e, a} with a + a = a.
FiniteCommutativeMonoid absorbing() { return FiniteCommutativeMonoid({{0, 1}, {1, 1}}, 0); }

// Relabels a table by the permutation `perm` (old index -> new index).
FiniteCommutativeMonoid relabel(const FiniteCommutativeMonoid& s, const std::vector<std::size_t>& perm) {
  CayleyTable t(s.size(), std::vector<std::size_t>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) t[perm[a]][perm[b]] = perm[s.table()[a][b]];
  return FiniteCommutativeMonoid(t, perm[s.identity()]);
}

// Every abelian group of order <= 8 as a product of cyclic groups.
std::vector<std::vector<std::size_t>> abelian_groups_up_to_8() {
  return {{1}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2}};
}

FgAbelianGroup expected_group(const std::vector<std::size_t>& orders) {
  FgAbelianGroup g;
  for (std::size_t o : orders) g = exactalg::direct_sum(g, o == 1 ? FgAbelianGroup() : FgAbelianGroup::cyclic(o));
  return g;
}

// All maps S -> Z/m given by the images of each element, filtered to
// homomorphisms. Exhaustive; only for small |S| and m.
std::vector<std::vector<std::size_t>> homomorphisms_to_cyclic(const FiniteCommutativeMonoid& s, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> img(s.size(), 0);
  const auto ok = [&] {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        if (img[s.add(a, b)] != (img[a] + img[b]) % m) return false;
    return true;
  };
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == s.size()) {
      if (ok()) out.push_back(img);
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      img[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("monoid validation") {
  CHECK_THROWS_AS(FiniteCommutativeMonoid({{0, 1}, {0, 1}}, 0), Error);       // not commutative
  CHECK_THROWS_AS(FiniteCommutativeMonoid({{0, 1}, {1, 1}}, 1), Error);       // wrong identity
  CHECK_THROWS_AS(FiniteCommutativeMonoid({{0, 1}, {1, 2}}, 0), Error);       // out of range
  CHECK_THROWS_AS(FiniteCommutativeMonoid({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}, 0), Error);  // not associative
  CHECK_THROWS_AS(FiniteCommutativeMonoid({}, 0), Error);
  CHECK_NOTHROW(absorbing());
  CHECK_THROWS_AS(absorbing().add(0, 2), Error);
  CHECK_THROWS_AS(FreeCommutativeMonoid(2).check(big_vector({1, -1})), Error);
}

TEST_CASE("pair equivalence examples") {
  const FreeCommutativeMonoid n1(1);
  CHECK(pair_equivalent(n1, big_vector({3}), big_vector({1}), big_vector({5}), big_vector({3})));
  CHECK_FALSE(pair_equivalent(n1, big_vector({3}), big_vector({1}), big_vector({5}), big_vector({2})));
  const auto s = absorbing();
  CHECK(pair_equivalent(s, 0, 1, 1, 0));
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) CHECK(pair_equivalent(s, x, x, y, y));
  const auto z3 = FiniteCommutativeMonoid::cyclic_product({3});
  CHECK_FALSE(pair_equivalent(z3, 1, 0, 0, 0));
  CHECK_THROWS_AS(pair_equivalent(z3, 3, 0, 0, 0), Error);
}

TEST_CASE("completion examples") {
  const auto n1 = completion(FreeCommutativeMonoid(1));
  CHECK(n1.carrier().to_string() == "Z");
  CHECK(n1.phi(big_vector({4})) == big_vector({4}));
  CHECK(completion(FreeCommutativeMonoid(3)).carrier() == FgAbelianGroup::free(3));
  CHECK(completion(FiniteCommutativeMonoid::cyclic_product({2})).carrier().to_string() == "Z/2");
  CHECK(completion(absorbing()).carrier().is_trivial());
  // Truncated counting monoid {0, 1, 2} with 1 + 2 = 2 + 2 = 2: absorbing top, trivial completion.
  CHECK(completion(FiniteCommutativeMonoid({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0)).carrier().is_trivial());
  // {0, a, b} with a + a = b, b + a = a: the period-2 part survives.
  CHECK(completion(FiniteCommutativeMonoid({{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}, 0)).carrier().to_string() == "Z/2");
}

TEST_CASE("completion of every abelian group of order <= 8 is the group itself") {
  std::mt19937_64 rng(67);
  for (const auto& orders : abelian_groups_up_to_8()) {
    const auto s = FiniteCommutativeMonoid::cyclic_product(orders);
    CHECK(completion(s).carrier() == expected_group(orders));
    std::vector<std::size_t> perm(s.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(completion(relabel(s, perm)).carrier() == expected_group(orders));
  }
}

TEST_CASE("property: completion matches the minimal-ideal oracle for all monoids of size <= 4") {
  std::size_t seen = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    ktcp::testing::for_each_commutative_monoid(n, [&](const CayleyTable& t) {
      ++seen;
      const FiniteCommutativeMonoid s(t, 0);
      const auto g = completion(s);
      const auto oracle = ktcp::testing::kernel_group(t, 0);
      CHECK(*g.carrier().order() == oracle.order());
      for (std::size_t m = 2; m <= n; ++m)
        CHECK(ktcp::testing::killed_by_from_torsion(g.carrier(), static_cast<std::int64_t>(m)) ==
              oracle.killed_by(m));
    });
  CHECK(seen > 100);
}

TEST_CASE("property: equivalence relation and well-defined addition, exhaustive on size <= 5") {
  std::size_t monoids = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    ktcp::testing::for_each_commutative_monoid(n, [&](const CayleyTable& t) {
      ++monoids;
      const FiniteCommutativeMonoid s(t, 0);
      const std::size_t p2 = n * n;
      std::vector<std::vector<bool>> eq(p2, std::vector<bool>(p2));
      for (std::size_t p = 0; p < p2; ++p)
        for (std::size_t q = 0; q < p2; ++q) eq[p][q] = pair_equivalent(s, p / n, p % n, q / n, q % n);
      bool ok = true;
      for (std::size_t p = 0; p < p2 && ok; ++p) {
        ok = ok && eq[p][p];
        for (std::size_t q = 0; q < p2 && ok; ++q) {
          ok = ok && eq[p][q] == eq[q][p];
          if (!eq[p][q]) continue;
          for (std::size_t r = 0; r < p2 && ok; ++r) {
            ok = ok && (!eq[q][r] || eq[p][r]);
            // p ~ q implies p + r ~ q + r.
            const std::size_t pr = s.add(p / n, r / n) * n + s.add(p % n, r % n);
            const std::size_t qr = s.add(q / n, r / n) * n + s.add(q % n, r % n);
            ok = ok && eq[pr][qr];
          }
        }
        // [(x, y)] + [(y, x)] is the class of (e, e).
        const std::size_t x = p / n, y = p % n, xy = s.add(x, y);
        ok = ok && pair_equivalent(s, xy, xy, 0, 0);
      }
      CHECK(ok);
    });
  CHECK(monoids > 1000);
}

TEST_CASE("class_of agrees with phi differences") {
  for (const auto& orders : abelian_groups_up_to_8()) {
    const auto g = completion(FiniteCommutativeMonoid::cyclic_product(orders));
    const auto& c = g.carrier();
    for (std::size_t x = 0; x < g.monoid().size(); ++x)
      for (std::size_t y = 0; y < g.monoid().size(); ++y) CHECK(g.class_of(x, y) == c.subtract(g.phi(x), g.phi(y)));
    CHECK(g.phi(g.monoid().identity()) == c.zero());
  }
  const auto f = completion(FreeCommutativeMonoid(2));
  CHECK(f.class_of(big_vector({3, 1}), big_vector({1, 4})) == big_vector({2, -3}));
}

TEST_CASE("universal factor examples") {
  const FgAbelianGroup z = FgAbelianGroup::free(1);
  const auto n1 = completion(FreeCommutativeMonoid(1));
  const auto id = universal_factor(n1, z, [](const auto& x) { return x; });
  CHECK(id.generator_images() == std::vector<exactalg::GroupElement>{big_vector({1})});

  const auto n2 = completion(FreeCommutativeMonoid(2));
  const auto sum = universal_factor(n2, z, [](const auto& x) { return exactalg::GroupElement{x[0] + x[1]}; });
  CHECK(sum.apply(big_vector({3, -5})) == big_vector({-2}));
  CHECK(sum.apply(n2.phi(big_vector({1, 0}))) == big_vector({1}));
  CHECK(sum.apply(n2.phi(big_vector({0, 1}))) == big_vector({1}));

  const auto ab = completion(absorbing());
  const FgAbelianGroup z2 = FgAbelianGroup::cyclic(2);
  CHECK(homomorphisms_to_cyclic(absorbing(), 2).size() == 1);
  const auto zero = universal_factor(ab, z2, [](std::size_t) { return exactalg::GroupElement{0}; });
  CHECK(zero.source().is_trivial());
  try {
    universal_factor(ab, z2, [](std::size_t x) { return exactalg::GroupElement{BigInt(static_cast<unsigned long>(x))}; });
    FAIL("expected a homomorphism violation");
  } catch (const NotAHomomorphism& e) {
    CHECK(e.first() == "1");
    CHECK(e.second() == "1");
  }
  CHECK_THROWS_AS(universal_factor(n1, z, [](const auto& x) { return exactalg::GroupElement{x[0] * x[0]}; }),
                  NotAHomomorphism);
  CHECK_THROWS_AS(universal_factor(n1, z, [](const auto& x) { return exactalg::GroupElement{x[0] + 1}; }),
                  NotAHomomorphism);
}

TEST_CASE("property: theta o phi = psi for every homomorphism into Z/m, m <= 8") {
  for (const auto& orders : abelian_groups_up_to_8()) {
    const auto s = FiniteCommutativeMonoid::cyclic_product(orders);
    if (s.size() > 6) continue;  // keep the exhaustive psi enumeration small
    const auto g = completion(s);
    for (std::size_t m = 2; m <= 8; ++m) {
      const FgAbelianGroup target = FgAbelianGroup::cyclic(m);
      for (const auto& img : homomorphisms_to_cyclic(s, m)) {
        const auto psi = [&](std::size_t x) { return exactalg::GroupElement{BigInt(static_cast<unsigned long>(img[x]))}; };
        const auto theta = universal_factor(g, target, psi);
        for (std::size_t x = 0; x < s.size(); ++x) CHECK(theta.apply(g.phi(x)) == psi(x));
      }
    }
  }
  // Larger groups: the projections onto each cyclic factor.
  for (const auto& orders : abelian_groups_up_to_8()) {
    const auto s = FiniteCommutativeMonoid::cyclic_product(orders);
    const auto g = completion(s);
    std::size_t stride = s.size();
    for (std::size_t f = 0; f < orders.size(); ++f) {
      stride /= orders[f];
      if (orders[f] == 1) continue;
      const FgAbelianGroup target = FgAbelianGroup::cyclic(orders[f]);
      const auto psi = [&](std::size_t x) {
        return exactalg::GroupElement{BigInt(static_cast<unsigned long>((x / stride) % orders[f]))};
      };
      const auto theta = universal_factor(g, target, psi);
      for (std::size_t x = 0; x < s.size(); ++x) CHECK(theta.apply(g.phi(x)) == psi(x));
    }
  }
}

TEST_CASE("property: theta o phi = psi on random maps N^k -> Z") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<long> w(k);
    for (auto& x : w) x = c(rng);
    const auto g = completion(FreeCommutativeMonoid(k));
    const auto psi = [&](const FreeCommutativeMonoid::Element& x) {
      BigInt s = 0;
      for (std::size_t i = 0; i < k; ++i) s += w[i] * x[i];
      return exactalg::GroupElement{s};
    };
    const auto theta = universal_factor(g, FgAbelianGroup::free(1), psi);
    for (int probe = 0; probe < 5; ++probe) {
      FreeCommutativeMonoid::Element x(k);
      for (auto& v : x) v = static_cast<long>(rng() % 7);
      CHECK(theta.apply(g.phi(x)) == psi(x));
    }
  }
}

TEST_CASE("Cayley table format") {
  const auto s = parse_cayley_table("2 0\n0 1\n1 1\n");
  CHECK(s.table() == absorbing().table());
  std::ostringstream out;
  write_cayley_table(out, FiniteCommutativeMonoid::cyclic_product({2, 2}));
  CHECK(parse_cayley_table(out.str()).table() == FiniteCommutativeMonoid::cyclic_product({2, 2}).table());
  CHECK_THROWS_AS(parse_cayley_table("2 0\n0 1\n1"), Error);
  CHECK_THROWS_AS(parse_cayley_table("2 0\n0 1\n1 1 5"), Error);
  CHECK_THROWS_AS(parse_cayley_table("x"), Error);
  CHECK_THROWS_AS(parse_cayley_table("2 0\n0 1\n0 1\n"), Error);
}
