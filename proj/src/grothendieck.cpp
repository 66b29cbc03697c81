#include "ktcp/grothendieck.hpp"

#include <algorithm>
#include <istream>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ktcp::grothendieck {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

FiniteCommutativeMonoid::FiniteCommutativeMonoid(std::vector<std::vector<std::size_t>> table,
                                                 std::size_t identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t n = table_.size();
  require(n > 0, "a monoid needs at least one element");
  require(identity_ < n, "identity index out of range");
  for (const auto& row : table_) {
    require(row.size() == n, "Cayley table must be square");
    for (std::size_t v : row) require(v < n, "Cayley table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[identity_][a] != a) throw Error("identity law fails at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] != table_[b][a])
        throw Error("table is not commutative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error("table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                      std::to_string(c) + ")");
    }
  }
}

FiniteCommutativeMonoid FiniteCommutativeMonoid::cyclic_product(const std::vector<std::size_t>& orders) {
  std::size_t n = 1;
  for (std::size_t o : orders) {
    require(o >= 1, "cyclic factor of order zero");
    n *= o;
  }
  // Mixed radix with the last factor varying fastest.
  const auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      d[i] = x % orders[i];
      x /= orders[i];
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto da = digits(a), db = digits(b);
      std::size_t c = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) c = c * orders[i] + (da[i] + db[i]) % orders[i];
      table[a][b] = c;
    }
  return FiniteCommutativeMonoid(std::move(table), 0);
}

std::size_t FiniteCommutativeMonoid::add(std::size_t a, std::size_t b) const {
  check(a);
  check(b);
  return table_[a][b];
}

void FiniteCommutativeMonoid::check(std::size_t x) const {
  if (x >= size()) throw Error("monoid element " + std::to_string(x) + " out of range");
}

FreeCommutativeMonoid::Element FreeCommutativeMonoid::generator(std::size_t i) const {
  require(i < generator_count_, "generator index out of range");
  Element e(generator_count_);
  e[i] = 1;
  return e;
}

FreeCommutativeMonoid::Element FreeCommutativeMonoid::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element c(generator_count_);
  for (std::size_t i = 0; i < generator_count_; ++i) c[i] = a[i] + b[i];
  return c;
}

void FreeCommutativeMonoid::check(const Element& x) const {
  require(x.size() == generator_count_, "exponent vector has the wrong length");
  for (const auto& v : x) require(v >= 0, "exponents must be nonnegative");
}

std::string FreeCommutativeMonoid::describe(const Element& x) const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].get_str();
  return s + ")";
}

bool pair_equivalent(const FiniteCommutativeMonoid& s, std::size_t x, std::size_t y, std::size_t u,
                     std::size_t v) {
  const std::size_t lhs = s.add(x, v), rhs = s.add(u, y);
  for (std::size_t t = 0; t < s.size(); ++t)
    if (s.add(lhs, t) == s.add(rhs, t)) return true;
  return false;
}

bool pair_equivalent(const FreeCommutativeMonoid& s, const FreeCommutativeMonoid::Element& x,
                     const FreeCommutativeMonoid::Element& y, const FreeCommutativeMonoid::Element& u,
                     const FreeCommutativeMonoid::Element& v) {
  return s.add(x, v) == s.add(u, y);
}

GrothendieckGroup<FiniteCommutativeMonoid> completion(const FiniteCommutativeMonoid& s) {
  const std::size_t n = s.size();
  const auto pair_index = [n](std::size_t x, std::size_t y) { return x * n + y; };

  UnionFind uf(n * n);
  for (std::size_t p = 0; p < n * n; ++p)
    for (std::size_t q = p + 1; q < n * n; ++q)
      if (uf.find(p) != uf.find(q) && pair_equivalent(s, p / n, p % n, q / n, q % n)) uf.unite(p, q);

  // Dense class numbering in order of first representative.
  std::vector<std::size_t> class_of_pair(n * n);
  std::vector<std::size_t> representative;
  {
    std::vector<std::size_t> slot(n * n, n * n);
    for (std::size_t p = 0; p < n * n; ++p) {
      const std::size_t r = uf.find(p);
      if (slot[r] == n * n) {
        slot[r] = representative.size();
        representative.push_back(p);
      }
      class_of_pair[p] = slot[r];
    }
  }
  const std::size_t classes = representative.size();
  const auto class_sum = [&](std::size_t c, std::size_t d) {
    const std::size_t p = representative[c], q = representative[d];
    return class_of_pair[pair_index(s.add(p / n, q / n), s.add(p % n, q % n))];
  };

  // Presentation on one generator per class: the zero class, plus
  // e_c + e_g = e_{c+g} for every class c and every g in phi(S). phi(S)
  // generates the group, so these Cayley-graph relations present it.
  std::vector<std::size_t> phi_classes;
  for (std::size_t x = 0; x < n; ++x) phi_classes.push_back(class_of_pair[pair_index(s.add(x, x), x)]);
  std::sort(phi_classes.begin(), phi_classes.end());
  phi_classes.erase(std::unique(phi_classes.begin(), phi_classes.end()), phi_classes.end());

  const std::size_t rows = 1 + classes * phi_classes.size();
  exactalg::IntegerMatrix relations(rows, classes);
  relations(0, class_of_pair[pair_index(s.identity(), s.identity())]) = 1;
  std::size_t r = 1;
  for (std::size_t c = 0; c < classes; ++c)
    for (std::size_t g : phi_classes) {
      relations(r, c) += 1;
      relations(r, g) += 1;
      relations(r, class_sum(c, g)) -= 1;
      ++r;
    }
  auto presented = std::make_shared<exactalg::PresentedGroup>(exactalg::Presentation(classes, relations));
  require(presented->group().order() == BigInt(static_cast<unsigned long>(classes)),
          "class group classification disagrees with the class count");

  auto table = std::make_shared<std::vector<std::size_t>>(std::move(class_of_pair));
  FgAbelianGroup carrier = presented->group();
  return GrothendieckGroup<FiniteCommutativeMonoid>(
      s, std::move(carrier), [presented, table, n, classes](std::size_t x, std::size_t y) {
        std::vector<BigInt> unit(classes);
        unit[(*table)[x * n + y]] = 1;
        return presented->coordinates(unit);
      });
}

GrothendieckGroup<FreeCommutativeMonoid> completion(const FreeCommutativeMonoid& s) {
  return GrothendieckGroup<FreeCommutativeMonoid>(
      s, FgAbelianGroup::free(s.generator_count()),
      [](const FreeCommutativeMonoid::Element& x, const FreeCommutativeMonoid::Element& y) {
        GroupElement d(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
        return d;
      });
}

namespace {

// Builds theta from a representative pair per carrier generator, then checks
// theta(phi(x)) = psi(x) on `probe`. Uniqueness: every carrier generator is
// phi(x) - phi(y) for its representative, so theta is forced on generators.
template <class Monoid>
GroupHomomorphism factor_through(const GrothendieckGroup<Monoid>& g, const FgAbelianGroup& target,
                                 const MonoidMap<Monoid>& psi,
                                 const std::vector<std::pair<typename Monoid::Element, typename Monoid::Element>>&
                                     generator_pairs,
                                 const std::vector<typename Monoid::Element>& probe) {
  const FgAbelianGroup& carrier = g.carrier();
  std::vector<GroupElement> images;
  for (std::size_t k = 0; k < carrier.coordinate_count(); ++k) {
    const auto& [x, y] = generator_pairs[k];
    require(carrier.subtract(g.phi(x), g.phi(y)) == carrier.generator(k),
            "carrier generator is not a difference of phi images");
    images.push_back(target.subtract(target.normalize(psi(x)), target.normalize(psi(y))));
  }
  GroupHomomorphism theta(carrier, target, std::move(images));
  for (const auto& x : probe)
    if (theta.apply(g.phi(x)) != target.normalize(psi(x)))
      throw Error("theta(phi(" + g.monoid().describe(x) + ")) != psi(" + g.monoid().describe(x) + ")");
  return theta;
}

}  // namespace

GroupHomomorphism universal_factor(const GrothendieckGroup<FiniteCommutativeMonoid>& g,
                                   const FgAbelianGroup& target,
                                   const MonoidMap<FiniteCommutativeMonoid>& psi) {
  const auto& s = g.monoid();
  const std::size_t n = s.size();
  std::vector<GroupElement> values(n);
  for (std::size_t x = 0; x < n; ++x) {
    const GroupElement v = psi(x);
    if (v.size() != target.coordinate_count())
      throw Error("psi(" + std::to_string(x) + ") is not an element of the target");
    values[x] = target.normalize(v);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (values[s.add(a, b)] != target.add(values[a], values[b]))
        throw NotAHomomorphism(std::to_string(a), std::to_string(b));

  const FgAbelianGroup& carrier = g.carrier();
  std::vector<std::pair<std::size_t, std::size_t>> pairs(carrier.coordinate_count());
  std::vector<bool> found(carrier.coordinate_count(), false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const GroupElement c = g.class_of(x, y);
      for (std::size_t k = 0; k < carrier.coordinate_count(); ++k)
        if (!found[k] && c == carrier.generator(k)) {
          pairs[k] = {x, y};
          found[k] = true;
        }
    }
  for (bool f : found) require(f, "carrier generator has no representative pair");

  std::vector<std::size_t> probe(n);
  std::iota(probe.begin(), probe.end(), 0);
  return factor_through<FiniteCommutativeMonoid>(g, target, psi, pairs, probe);
}

GroupHomomorphism universal_factor(const GrothendieckGroup<FreeCommutativeMonoid>& g,
                                   const FgAbelianGroup& target,
                                   const MonoidMap<FreeCommutativeMonoid>& psi) {
  const auto& s = g.monoid();
  const std::size_t k = s.generator_count();
  const auto value = [&](const FreeCommutativeMonoid::Element& x) {
    const GroupElement v = psi(x);
    if (v.size() != target.coordinate_count())
      throw Error("psi(" + s.describe(x) + ") is not an element of the target");
    return target.normalize(v);
  };
  // psi(0) = 0 and additivity on pairs of generators.
  std::vector<FreeCommutativeMonoid::Element> probe{s.identity()};
  for (std::size_t i = 0; i < k; ++i) probe.push_back(s.generator(i));
  for (std::size_t i = 0; i < probe.size(); ++i)
    for (std::size_t j = i; j < probe.size(); ++j)
      if (value(s.add(probe[i], probe[j])) != target.add(value(probe[i]), value(probe[j])))
        throw NotAHomomorphism(s.describe(probe[i]), s.describe(probe[j]));

  std::vector<std::pair<FreeCommutativeMonoid::Element, FreeCommutativeMonoid::Element>> pairs;
  for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(s.generator(i), s.identity());
  return factor_through<FreeCommutativeMonoid>(g, target, psi, pairs, probe);
}

FiniteCommutativeMonoid read_cayley_table(std::istream& in) {
  long long n = -1, identity = -1;
  require(static_cast<bool>(in >> n >> identity), "Cayley table header must be \"n identity\"");
  require(n > 0 && identity >= 0, "Cayley table header out of range");
  std::vector<std::vector<std::size_t>> table(static_cast<std::size_t>(n), std::vector<std::size_t>(n));
  for (auto& row : table)
    for (auto& v : row) {
      long long x = -1;
      require(static_cast<bool>(in >> x), "Cayley table is truncated");
      require(x >= 0, "Cayley table entry out of range");
      v = static_cast<std::size_t>(x);
    }
  return FiniteCommutativeMonoid(std::move(table), static_cast<std::size_t>(identity));
}

FiniteCommutativeMonoid parse_cayley_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  FiniteCommutativeMonoid s = read_cayley_table(in);
  std::string rest;
  require(!(in >> rest), "trailing data after Cayley table");
  return s;
}

void write_cayley_table(std::ostream& out, const FiniteCommutativeMonoid& s) {
  out << s.size() << ' ' << s.identity() << '\n';
  for (const auto& row : s.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

}  // namespace ktcp::grothendieck
