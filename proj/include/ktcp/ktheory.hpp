// K-groups of complex projective spaces and spheres.
//
// K^q is 2-periodic in q. Sphere groups come from an axiom table
// (K~(S^i) = Z for even i, 0 for odd i); K-groups of CP^n are derived from
// that table by replaying the cell-by-cell induction over the pairs
// (CP^{k+1}, CP^k), with every exact window and ladder checked by homalg.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ktcp/exactalg.hpp"
#include "ktcp/homalg.hpp"
#include "ktcp/truncring.hpp"

namespace ktcp::ktheory {

using exactalg::FgAbelianGroup;
using exactalg::IntegerMatrix;
using truncring::TruncPoly;

struct Space {
  enum class Kind { Point, CPn, Sphere };
  Kind kind = Kind::Point;
  std::size_t parameter = 0;

  static Space point() { return {Kind::Point, 0}; }
  static Space cpn(std::size_t n) { return {Kind::CPn, n}; }
  /// Throws Error for m = 0.
  static Space sphere(std::size_t m);

  /// "point", "cpn:N" or "sphere:M".
  std::string to_string() const;
  friend bool operator==(const Space&, const Space&) = default;
};

/// Inverse of Space::to_string. Throws Error on malformed input.
Space parse_space(std::string_view text);

/// a_0 + a_1 γ + ... + a_n γ^n in K(CP^n) = Z[γ]/(γ^{n+1}), γ = ζ - 1.
class KClass {
 public:
  KClass(std::size_t n, std::vector<BigInt> coeffs);

  static KClass zero(std::size_t n) { return KClass(n, std::vector<BigInt>(n + 1)); }
  static KClass one(std::size_t n);
  static KClass gamma(std::size_t n);
  /// The Hopf bundle ζ = 1 + γ.
  static KClass zeta(std::size_t n);
  static KClass gamma_power(std::size_t n, std::size_t k);

  std::size_t ambient() const { return n_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& virtual_dimension() const { return coeffs_[0]; }
  bool is_reduced() const { return coeffs_[0] == 0; }

  friend KClass operator+(const KClass& a, const KClass& b);
  friend KClass operator-(const KClass& a, const KClass& b);
  /// Truncated product; throws Error when the ambient spaces differ.
  friend KClass operator*(const KClass& a, const KClass& b);
  friend bool operator==(const KClass&, const KClass&) = default;

  /// "1 + 2γ + γ^2"; "0" for zero.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<BigInt> coeffs_;
};

inline KClass k_ring_mul(const KClass& a, const KClass& b) { return a * b; }
KClass pow(const KClass& a, std::size_t k);

/// Σ a_k (e^x - 1)^k in Q[x]/(x^{n+1}).
TruncPoly chern_character_map(const KClass& a);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Column k holds the coefficients of ch(γ^k) in the basis 1, x, ..., x^n.
RationalMatrix ch_matrix(std::size_t n);
bool is_lower_unitriangular(const RationalMatrix& m);
/// Exact determinant of a square rational matrix.
Rational determinant(const RationalMatrix& m);

/// K~(S^i): Z for even i, 0 for odd i. Axiom, not computed.
FgAbelianGroup reduced_sphere_k(std::size_t i);

/// K^q(X) for a point, a sphere or CP^n. For a point or a sphere and q <= 0,
/// K^q(X) = K~(S^{-q}) ⊕ K~(Σ^{-q} X) from the axiom table; CP^n groups come
/// from replay_induction. Positive q are folded onto {0, -1} by periodicity.
FgAbelianGroup k_groups(const Space& space, long q);

/// K^q for q in [q_min, q_max].
struct KGroupTable {
  Space space;
  std::map<long, FgAbelianGroup> entries;

  /// entries[q] == entries[q + 2] wherever both are present.
  bool is_periodic() const;
};

/// Builds the table from one replay (for CP^n) and checks periodicity;
/// throws Error if the check fails.
KGroupTable k_group_table(const Space& space, long q_min, long q_max);

/// One term of an exact window.
struct WindowTerm {
  std::string name;   // e.g. "K~(S^4)"
  std::string group;  // normal form notation
  std::string source; // "axiom", "hypothesis", "model" or "derived"

  friend bool operator==(const WindowTerm&, const WindowTerm&) = default;
};

/// One inference of the induction.
struct TraceStep {
  std::string label;               // e.g. "K~(CP^3)"
  std::string rule;                // "base_case", "split_free_extension" or "pinched_between_zeros"
  std::vector<WindowTerm> window;  // terms in arrow order; empty for base cases
  std::vector<bool> exact;         // exactness at window positions 1..3
  std::optional<bool> five_lemma;  // verdict of five_lemma_check on the ladder
  std::string conclusion;          // group computed for the label

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct InductionTrace {
  std::size_t n = 0;
  std::vector<TraceStep> steps;
  FgAbelianGroup reduced_k0;
  FgAbelianGroup k0;
  FgAbelianGroup k1;

  /// Every window exact and every ladder verified.
  bool all_checks_pass() const;
  friend bool operator==(const InductionTrace&, const InductionTrace&) = default;
};

/// Replays the induction up to CP^n. Requires n >= 1. Throws Error if any
/// window is inexact or any ladder fails.
InductionTrace replay_induction(std::size_t n);

nlohmann::json to_json(const InductionTrace& t);
InductionTrace trace_from_json(const nlohmann::json& j);

/// Bott(a_1, a_2) = a_1 · 1 + a_2 · ζ in K(CP^1) = K(S^2).
KClass bott(const BigInt& a1, const BigInt& a2);
/// Columns are bott(1, 0) and bott(0, 1) in the basis (1, γ).
IntegerMatrix bott_matrix();
bool bott_check();

/// ch on K~(S^{2n}) = Z·β, into H~^*(S^{2n}; Q) = Q·g. The sign convention
/// is ch(β) = +g.
struct SphereChCertificate {
  std::size_t n = 0;
  /// Coefficient c with ch(β) = c·g.
  Rational generator_image;
  /// Top coefficient of ch(γ^n) on CP^n, which p^* identifies with ch(β).
  Rational cpn_top_coefficient;
  /// Coefficients for n = 1, 2, ... as carried through each double suspension.
  std::vector<Rational> propagation;

  /// ch(m·β) = m·c·g.
  Rational image(const BigInt& m) const { return generator_image * Rational(m); }
  /// c is ±1 (image exactly Z·g), the CP^n cross-check agrees, and every
  /// propagation step preserves c.
  bool certifies_integral_image() const;
};

/// Requires n >= 1.
SphereChCertificate ch_image_on_sphere(std::size_t n);

}  // namespace ktcp::ktheory
