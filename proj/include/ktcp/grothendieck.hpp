// Group completion of commutative monoids.
//
// Two carriers are supported: finite monoids given by a Cayley table and the
// free commutative monoid N^k. Pairs (x, y) stand for formal differences
// x - y; (x, y) ~ (u, v) iff x + v + t = u + y + t for some t.

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ktcp/exactalg.hpp"

namespace ktcp::grothendieck {

using exactalg::FgAbelianGroup;
using exactalg::GroupElement;
using exactalg::GroupHomomorphism;

/// Elements are indices 0..size-1. The table is validated exhaustively for
/// closure, commutativity, associativity and the identity law.
class FiniteCommutativeMonoid {
 public:
  using Element = std::size_t;

  FiniteCommutativeMonoid(std::vector<std::vector<std::size_t>> table, std::size_t identity);

  /// Cayley table of Z/n1 x Z/n2 x ... in mixed-radix order; identity 0.
  static FiniteCommutativeMonoid cyclic_product(const std::vector<std::size_t>& orders);

  std::size_t size() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t add(std::size_t a, std::size_t b) const;
  /// Throws Error unless 0 <= x < size.
  void check(std::size_t x) const;
  std::string describe(std::size_t x) const { return std::to_string(x); }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
};

/// N^k under coordinatewise addition.
class FreeCommutativeMonoid {
 public:
  using Element = std::vector<BigInt>;

  explicit FreeCommutativeMonoid(std::size_t generator_count) : generator_count_(generator_count) {}

  std::size_t generator_count() const { return generator_count_; }
  Element identity() const { return Element(generator_count_); }
  Element generator(std::size_t i) const;
  Element add(const Element& a, const Element& b) const;
  /// Throws Error unless x has generator_count nonnegative entries.
  void check(const Element& x) const;
  std::string describe(const Element& x) const;

 private:
  std::size_t generator_count_;
};

bool pair_equivalent(const FiniteCommutativeMonoid& s, std::size_t x, std::size_t y, std::size_t u,
                     std::size_t v);
/// N^k is cancellative, so the criterion is x + v = u + y.
bool pair_equivalent(const FreeCommutativeMonoid& s, const FreeCommutativeMonoid::Element& x,
                     const FreeCommutativeMonoid::Element& y, const FreeCommutativeMonoid::Element& u,
                     const FreeCommutativeMonoid::Element& v);

/// The completion of a monoid M: a normal-form carrier together with the
/// class map on pairs. class_of(x, y) = phi(x) - phi(y).
template <class Monoid>
class GrothendieckGroup {
 public:
  using Element = typename Monoid::Element;
  using Classifier = std::function<GroupElement(const Element&, const Element&)>;

  GrothendieckGroup(Monoid monoid, FgAbelianGroup carrier, Classifier classify)
      : monoid_(std::move(monoid)), carrier_(std::move(carrier)), classify_(std::move(classify)) {}

  const Monoid& monoid() const { return monoid_; }
  const FgAbelianGroup& carrier() const { return carrier_; }
  GroupElement class_of(const Element& x, const Element& y) const {
    monoid_.check(x);
    monoid_.check(y);
    return classify_(x, y);
  }
  /// phi(x) = [(x + x, x)].
  GroupElement phi(const Element& x) const { return class_of(monoid_.add(x, x), x); }

 private:
  Monoid monoid_;
  FgAbelianGroup carrier_;
  Classifier classify_;
};

/// Union-find over S x S, then the class group is classified by SNF.
GrothendieckGroup<FiniteCommutativeMonoid> completion(const FiniteCommutativeMonoid& s);
/// Carrier Z^k with class_of(x, y) = x - y.
GrothendieckGroup<FreeCommutativeMonoid> completion(const FreeCommutativeMonoid& s);

/// Raised when a candidate psi fails to be additive.
class NotAHomomorphism : public Error {
 public:
  NotAHomomorphism(std::string first, std::string second)
      : Error("psi is not a homomorphism: psi(a + b) != psi(a) + psi(b) at (a, b) = (" + first + ", " +
              second + ")"),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

template <class Monoid>
using MonoidMap = std::function<GroupElement(const typename Monoid::Element&)>;

/// The unique homomorphism theta : G -> target with theta(phi(x)) = psi(x).
/// psi is checked on all pairs of a finite monoid and on pairs of
/// generators of N^k; violations raise NotAHomomorphism.
GroupHomomorphism universal_factor(const GrothendieckGroup<FiniteCommutativeMonoid>& g,
                                   const FgAbelianGroup& target,
                                   const MonoidMap<FiniteCommutativeMonoid>& psi);
GroupHomomorphism universal_factor(const GrothendieckGroup<FreeCommutativeMonoid>& g,
                                   const FgAbelianGroup& target,
                                   const MonoidMap<FreeCommutativeMonoid>& psi);

/// Cayley table format: a line "n identity", then n lines of n indices.
FiniteCommutativeMonoid read_cayley_table(std::istream& in);
FiniteCommutativeMonoid parse_cayley_table(std::string_view text);
void write_cayley_table(std::ostream& out, const FiniteCommutativeMonoid& s);

}  // namespace ktcp::grothendieck
