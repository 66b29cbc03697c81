// Newton polynomials and the Chern character of formal bundles.
//
// Grading: the Chern class c_k lives in H^{2k} but is stored at polynomial
// degree k, so a truncation order n covers H^{<=2n}. Chern classes are
// formal inputs; nothing here constructs them from bundle geometry, and the
// top class c_n of a rank-n bundle is taken as given.

#pragma once

#include <cstddef>
#include <string>

#include "ktcp/truncring.hpp"

namespace ktcp::chern {

using truncring::MultiPoly;
using truncring::TruncPoly;

/// A vector bundle known only through its rank and total Chern class.
class FormalBundle {
 public:
  /// total_chern must be integral with constant term 1, and c_k = 0 for
  /// k > dimension.
  FormalBundle(std::size_t dimension, TruncPoly total_chern);

  /// Trivial bundle of the given rank: c = 1.
  static FormalBundle trivial(std::size_t rank, std::size_t order);
  /// Line bundle with c = 1 + c1 * x.
  static FormalBundle line(const BigInt& c1, std::size_t order);
  /// Hopf bundle over CP^order: c = 1 + x.
  static FormalBundle hopf(std::size_t order) { return line(1, order); }

  std::size_t dimension() const { return dimension_; }
  const TruncPoly& total_chern() const { return total_chern_; }
  std::size_t order() const { return total_chern_.order(); }
  /// c_k as a coefficient; zero beyond the truncation order.
  BigInt chern_class(std::size_t k) const;

  friend bool operator==(const FormalBundle&, const FormalBundle&) = default;

 private:
  std::size_t dimension_;
  TruncPoly total_chern_;
};

/// s_k with p_k = s_k(e_1, ..., e_k), as a polynomial in k variables named e1..ek.
struct NewtonPolynomial {
  std::size_t k;
  MultiPoly expression;

  std::string to_string() const { return expression.to_string("e"); }
};

/// Built from p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k.
/// Throws Error for k = 0.
NewtonPolynomial newton_s(std::size_t k);

/// dim E + sum_{k=1}^{n} s_k(c_1, ..., c_k) / k! in Q[x]/(x^{n+1}).
/// Requires n <= b.order().
TruncPoly chern_character(const FormalBundle& b, std::size_t n);
inline TruncPoly chern_character(const FormalBundle& b) { return chern_character(b, b.order()); }

/// Ranks add, total Chern classes multiply.
FormalBundle whitney_sum(const FormalBundle& a, const FormalBundle& b);

/// Tensor product of two line bundles: first Chern classes add.
FormalBundle tensor_line(const FormalBundle& a, const FormalBundle& b);

}  // namespace ktcp::chern
