// Truncated polynomial rings Q[x]/(x^{n+1}) with exact coefficients, and a
// small sparse multivariate polynomial type.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ktcp/exactalg.hpp"

namespace ktcp::truncring {

/// Element of Q[x]/(x^{order+1}). Integer polynomials are the same type with
/// every denominator equal to one (see is_integral).
class TruncPoly {
 public:
  explicit TruncPoly(std::size_t order);
  TruncPoly(std::size_t order, std::vector<Rational> coeffs);

  static TruncPoly constant(std::size_t order, const Rational& c);
  /// c * x^k (zero if k > order).
  static TruncPoly monomial(std::size_t order, std::size_t k, const Rational& c = 1);
  /// The generator x.
  static TruncPoly x(std::size_t order) { return monomial(order, 1); }

  std::size_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero for k > order.
  Rational coeff(std::size_t k) const;
  bool is_zero() const;
  bool is_integral() const;
  /// Same coefficients in a ring of another order (truncating or zero-padding).
  TruncPoly with_order(std::size_t order) const;

  TruncPoly operator-() const;
  TruncPoly scaled(const Rational& c) const;
  friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  friend bool operator==(const TruncPoly& a, const TruncPoly& b) = default;

  /// "c0 + c1*x + ... + cn*x^n" with zero terms dropped; "0" if zero.
  std::string to_string() const;

 private:
  std::size_t order_;
  std::vector<Rational> coeffs_;
};

TruncPoly pow(const TruncPoly& p, std::size_t k);

/// sum_{k=0}^{order} p^k / k!. Throws Error unless p has zero constant term.
TruncPoly exp_nilpotent(const TruncPoly& p);

/// Parses the to_string notation; also accepts implicit products such as
/// "1+2x+x^2". Terms above `order` vanish in the ring and are dropped.
TruncPoly parse_trunc_poly(std::string_view text, std::size_t order);

/// M[p][q] = coefficient of x^n in x^p * x^q, over 0 <= p, q <= n.
exactalg::IntegerMatrix pairing_matrix(std::size_t n);

/// Polynomial in variable_count variables with rational coefficients.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  /// Lexicographically descending order of monomials.
  using Terms = std::map<Exponents, Rational, std::greater<Exponents>>;

  explicit MultiPoly(std::size_t variable_count);
  static MultiPoly constant(std::size_t variable_count, const Rational& c);
  /// x_{i+1} (zero-based index i).
  static MultiPoly variable(std::size_t variable_count, std::size_t i);
  /// c * x^e.
  static MultiPoly monomial(Exponents e, const Rational& c = 1);

  std::size_t variable_count() const { return variable_count_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned total_degree() const;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly operator-() const { return scaled(-1); }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Terms of total degree <= max_degree.
  MultiPoly truncated(unsigned max_degree) const;

  /// Readable form with variables named prefix1, prefix2, ...
  std::string to_string(std::string_view prefix = "x") const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t variable_count_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

/// p(values[0], ..., values[n-1]); all values share one variable count.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> values);
Rational evaluate(const MultiPoly& p, std::span<const Rational> values);
/// p evaluated in the truncated ring; all values share one order.
TruncPoly evaluate(const MultiPoly& p, std::span<const TruncPoly> values);

/// e_i(x_1, ..., x_n); e_0 = 1 and e_i = 0 for i > n.
MultiPoly elementary_symmetric(std::size_t i, std::size_t n);
/// p_k(x_1, ..., x_n) = x_1^k + ... + x_n^k.
MultiPoly power_sum(std::size_t k, std::size_t n);

}  // namespace ktcp::truncring
