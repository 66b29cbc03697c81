#include "ktcp/chern.hpp"

#include <utility>
#include <vector>

namespace ktcp::chern {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

// p_1..p_k in the variables e_1..e_k via Newton's recurrence.
std::vector<MultiPoly> power_sums_in_elementary(std::size_t k) {
  std::vector<MultiPoly> p;
  p.reserve(k);
  const auto e = [k](std::size_t i) { return MultiPoly::variable(k, i - 1); };
  for (std::size_t m = 1; m <= k; ++m) {
    MultiPoly pm(k);
    long sign = 1;
    for (std::size_t i = 1; i < m; ++i, sign = -sign) pm = pm + (e(i) * p[m - i - 1]).scaled(sign);
    pm = pm + e(m).scaled(sign * static_cast<long>(m));
    p.push_back(std::move(pm));
  }
  return p;
}

}  // namespace

FormalBundle::FormalBundle(std::size_t dimension, TruncPoly total_chern)
    : dimension_(dimension), total_chern_(std::move(total_chern)) {
  require(total_chern_.coeff(0) == 1, "total Chern class must have constant term 1");
  require(total_chern_.is_integral(), "Chern classes must be integral");
  for (std::size_t k = dimension_ + 1; k <= total_chern_.order(); ++k)
    if (total_chern_.coeff(k) != 0)
      throw Error("c_" + std::to_string(k) + " must vanish for a bundle of rank " + std::to_string(dimension_));
}

FormalBundle FormalBundle::trivial(std::size_t rank, std::size_t order) {
  return FormalBundle(rank, TruncPoly::constant(order, 1));
}

FormalBundle FormalBundle::line(const BigInt& c1, std::size_t order) {
  return FormalBundle(1, TruncPoly::constant(order, 1) + TruncPoly::monomial(order, 1, Rational(c1)));
}

BigInt FormalBundle::chern_class(std::size_t k) const { return total_chern_.coeff(k).get_num(); }

NewtonPolynomial newton_s(std::size_t k) {
  require(k >= 1, "Newton polynomials are indexed from 1");
  return NewtonPolynomial{k, power_sums_in_elementary(k).back()};
}

TruncPoly chern_character(const FormalBundle& b, std::size_t n) {
  require(n <= b.order(), "truncation order exceeds the order of the Chern class");
  TruncPoly ch = TruncPoly::constant(n, Rational(static_cast<unsigned long>(b.dimension())));
  if (n == 0) return ch;
  // c_i placed at degree i.
  std::vector<TruncPoly> classes;
  for (std::size_t i = 1; i <= n; ++i)
    classes.push_back(TruncPoly::monomial(n, i, b.total_chern().coeff(i)));
  const std::vector<MultiPoly> s = power_sums_in_elementary(n);
  BigInt factorial = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    factorial *= static_cast<unsigned long>(k);
    // s_k only involves e_1..e_k; the remaining variables carry zero weight.
    const TruncPoly sk = truncring::evaluate(s[k - 1], std::span<const TruncPoly>(classes));
    ch = ch + sk.scaled(Rational(BigInt(1), factorial));
  }
  return ch;
}

FormalBundle whitney_sum(const FormalBundle& a, const FormalBundle& b) {
  require(a.order() == b.order(), "truncation orders differ");
  return FormalBundle(a.dimension() + b.dimension(), a.total_chern() * b.total_chern());
}

FormalBundle tensor_line(const FormalBundle& a, const FormalBundle& b) {
  require(a.dimension() == 1 && b.dimension() == 1, "tensor_line needs two line bundles");
  require(a.order() == b.order(), "truncation orders differ");
  return FormalBundle::line(a.chern_class(1) + b.chern_class(1), a.order());
}

}  // namespace ktcp::chern
