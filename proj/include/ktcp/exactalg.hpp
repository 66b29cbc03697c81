// Exact integer linear algebra: dense big-integer matrices, Smith normal
// form, integer solvers and finitely generated abelian groups.
//
// Nothing in here touches floating point. All values are plain values; every
// operation is a pure function of its arguments.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ktcp {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exactalg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  /// Builds a matrix from literal rows; every row must have the same length.
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(std::size_t n);
  /// rows x cols matrix with `diag` on the main diagonal and zeros elsewhere.
  static IntegerMatrix diagonal(std::span<const BigInt> diag, std::size_t rows, std::size_t cols);
  /// Single column holding `values`.
  static IntegerMatrix column(std::span<const BigInt> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<BigInt>& entries() const { return entries_; }

  std::vector<BigInt> row(std::size_t r) const;
  std::vector<BigInt> col(std::size_t c) const;

  IntegerMatrix transpose() const;
  bool is_zero() const;
  /// Matrix-vector product; x.size() must equal cols().
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

  /// [this | other]; row counts must agree.
  IntegerMatrix hstack(const IntegerMatrix& other) const;
  /// Columns [first, first + count).
  IntegerMatrix col_range(std::size_t first, std::size_t count) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// u * a * v = diag(d) padded to the shape of a.
///
/// `d` holds only the nonzero invariant factors (so d.size() is the rank);
/// they are positive and form a divisibility chain. u and v are square and
/// unimodular.
struct SmithForm {
  std::vector<BigInt> d;
  IntegerMatrix u;
  IntegerMatrix v;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;

  std::size_t rank() const { return d.size(); }
  /// diag(d) padded with zeros to original_rows x original_cols.
  IntegerMatrix diagonal_matrix() const;
};

/// Pivot rule: nonzero entry of minimal absolute value in the active
/// submatrix, ties to the lowest (row, col). Signs are absorbed into v.
SmithForm smith_normal_form(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination). Requires a square matrix.
BigInt determinant(const IntegerMatrix& a);

/// Columns form a basis of {x in Z^cols : a x = 0}. The basis extends to a
/// unimodular basis of Z^cols, so every column is primitive.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Some integer solution of a x = b, or nullopt if none exists over Z.
std::optional<std::vector<BigInt>> solve(const IntegerMatrix& a, std::span<const BigInt> b);

/// True iff a is square with determinant +-1.
bool is_isomorphism(const IntegerMatrix& a);

/// Coordinates of an element of an FgAbelianGroup: free coordinates first,
/// then one coordinate per torsion factor, reduced into [0, d).
using GroupElement = std::vector<BigInt>;

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, each t_i >= 2.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  /// Validates the normal form; throws Error otherwise.
  FgAbelianGroup(std::size_t free_rank, std::vector<BigInt> torsion);

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }
  static FgAbelianGroup cyclic(const BigInt& order);
  /// Normal form of Z^generators / span(diag(factors)), where `factors` is
  /// any list of invariant factors of a relation matrix of that many
  /// generators (ones are dropped, the rest must already form a chain).
  static FgAbelianGroup from_invariant_factors(std::size_t generators,
                                               std::span<const BigInt> factors);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Number of coordinates of a GroupElement.
  std::size_t coordinate_count() const { return free_rank_ + torsion_.size(); }
  /// Order of a finite group; nullopt if free_rank > 0.
  std::optional<BigInt> order() const;

  GroupElement zero() const;
  /// k-th standard generator (free generators first, then torsion generators).
  GroupElement generator(std::size_t k) const;
  GroupElement normalize(GroupElement x) const;
  bool is_element(const GroupElement& x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const BigInt& k, const GroupElement& a) const;

  /// "Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk"; rank 1 prints as "Z"; the trivial group is "0".
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

/// Structural equality of normal forms; complete by the classification theorem.
bool groups_equal(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// Normal form of g ⊕ h.
FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h);

/// Parses the notation produced by FgAbelianGroup::to_string. Summands may be
/// given in any order and are renormalized ("Z/2 ⊕ Z/3" parses as Z/6).
FgAbelianGroup parse_group(std::string_view text);

/// Z^cols modulo the row span of `relations` (each row is one relation).
FgAbelianGroup cokernel(const IntegerMatrix& relations);

/// An abelian group given by generators and relations. Row i of `relations`
/// expresses relation i in generator coordinates.
struct Presentation {
  std::size_t generators = 0;
  IntegerMatrix relations{0, 0};

  static Presentation free(std::size_t rank);
  static Presentation cyclic(const BigInt& order);
  Presentation() = default;
  Presentation(std::size_t generator_count, IntegerMatrix relation_rows);

  /// Sum of two presentations on disjoint generator sets.
  Presentation direct_sum(const Presentation& other) const;
};

/// A presented group together with coordinates for its normal form.
class PresentedGroup {
 public:
  explicit PresentedGroup(Presentation p);

  const Presentation& presentation() const { return presentation_; }
  const FgAbelianGroup& group() const { return group_; }
  /// Normal-form coordinates of the element with generator coordinates x.
  GroupElement coordinates(std::span<const BigInt> x) const;
  /// Generator coordinates of a representative of a normal-form element.
  std::vector<BigInt> representative(const GroupElement& e) const;

 private:
  Presentation presentation_;
  FgAbelianGroup group_;
  IntegerMatrix v_;      // change of generator basis from the Smith form
  IntegerMatrix v_inv_;  // its inverse
  std::vector<BigInt> d_;
};

/// A homomorphism of normal-form groups given by the images of the source's
/// standard generators.
class GroupHomomorphism {
 public:
  /// Throws Error if an image is malformed or if some torsion generator of
  /// order t is not sent to an element killed by t.
  GroupHomomorphism(FgAbelianGroup source, FgAbelianGroup target,
                    std::vector<GroupElement> generator_images);

  const FgAbelianGroup& source() const { return source_; }
  const FgAbelianGroup& target() const { return target_; }
  const std::vector<GroupElement>& generator_images() const { return images_; }
  GroupElement apply(const GroupElement& x) const;

 private:
  FgAbelianGroup source_;
  FgAbelianGroup target_;
  std::vector<GroupElement> images_;
};

/// Matrix text format: a line "rows cols", then `rows` lines of integers.
IntegerMatrix read_matrix(std::istream& in);
IntegerMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& out, const IntegerMatrix& m);
std::string format_matrix(const IntegerMatrix& m);

}  // namespace exactalg
}  // namespace ktcp
