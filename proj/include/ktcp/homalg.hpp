// Chain complexes of free Z-modules, (co)homology, exactness of sequences of
// presented groups, the Five Lemma checker and free-quotient splitting.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ktcp/exactalg.hpp"

namespace ktcp::homalg {

using exactalg::FgAbelianGroup;
using exactalg::IntegerMatrix;
using exactalg::Presentation;

/// 0 <- C_0 <- C_1 <- ... <- C_top with C_k = Z^ranks[k].
///
/// differentials[k-1] is the boundary C_k -> C_{k-1}, of shape
/// ranks[k-1] x ranks[k]. Construction rejects inconsistent shapes and any
/// pair of consecutive boundaries whose composite is nonzero.
class ChainComplex {
 public:
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials);

  /// Complex with every boundary zero.
  static ChainComplex with_zero_boundaries(std::vector<std::size_t> ranks);

  std::size_t top() const { return ranks_.size() - 1; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Boundary C_k -> C_{k-1} for 0 <= k <= top + 1; the ends are the zero
  /// maps to and from the zero module.
  IntegerMatrix boundary(std::size_t k) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> differentials_;
};

/// ker(boundary k) / im(boundary k+1). Degrees above top give the zero
/// group; negative degrees throw Error.
FgAbelianGroup homology(const ChainComplex& c, int k);

/// Homology of the dual cochain complex: ker(d^k) / im(d^{k-1}) where d^k is
/// the transpose of boundary k+1. Same degree conventions as homology.
FgAbelianGroup cohomology(const ChainComplex& c, int k);

/// Cellular chain complex of CP^n: one cell in each even dimension up to 2n.
/// Each boundary has a zero domain or a zero codomain, so all are zero.
ChainComplex cpn_complex(std::size_t n);

/// Minimal CW model of S^m (one 0-cell, one m-cell). Rejects m = 0.
ChainComplex sphere_complex(std::size_t m);

/// Ranks line, then one matrix block (exactalg text format) per boundary
/// k = 1..top.
void write_complex(std::ostream& out, const ChainComplex& c);
ChainComplex read_complex(std::istream& in);

/// x lies in span(columns of `span`) + span(relations of g).
bool in_subgroup(const Presentation& g, const IntegerMatrix& span, std::span<const BigInt> x);

/// True iff f (generator coordinates, shape dst.generators x src.generators)
/// sends every relation of src into the relation lattice of dst.
bool is_well_defined(const IntegerMatrix& f, const Presentation& src, const Presentation& dst);

/// Generators (as columns) of the kernel of f: src -> dst on presented groups.
IntegerMatrix presented_kernel(const IntegerMatrix& f, const Presentation& src,
                               const Presentation& dst);

/// Bijectivity of a well-defined map of presented groups.
bool is_group_isomorphism(const IntegerMatrix& f, const Presentation& src,
                          const Presentation& dst);

/// groups[0] -> groups[1] -> ... with maps[i] : groups[i] -> groups[i+1].
class GroupSequence {
 public:
  /// Throws Error on shape mismatches or maps that are not well defined.
  GroupSequence(std::vector<Presentation> groups, std::vector<IntegerMatrix> maps);

  std::size_t length() const { return groups_.size(); }
  const std::vector<Presentation>& groups() const { return groups_; }
  const std::vector<IntegerMatrix>& maps() const { return maps_; }
  FgAbelianGroup group(std::size_t i) const;

 private:
  std::vector<Presentation> groups_;
  std::vector<IntegerMatrix> maps_;
};

/// im(maps[i-1]) = ker(maps[i]) inside groups[i]. Requires 1 <= i <= length-2.
bool is_exact_at(const GroupSequence& s, std::size_t i);

/// Two length-5 sequences and five vertical maps top[j] -> bottom[j].
class Ladder {
 public:
  Ladder(GroupSequence top, GroupSequence bottom, std::vector<IntegerMatrix> verticals);

  const GroupSequence& top() const { return top_; }
  const GroupSequence& bottom() const { return bottom_; }
  const std::vector<IntegerMatrix>& verticals() const { return verticals_; }

 private:
  GroupSequence top_;
  GroupSequence bottom_;
  std::vector<IntegerMatrix> verticals_;
};

/// Raised by five_lemma_check when a ladder is not a valid instance.
class LadderDiagnostic : public Error {
 public:
  enum class Kind {
    InexactRow,
    NonCommutingSquare,
    /// All hypotheses hold but the middle map is not an isomorphism.
    ConsistencyViolation,
  };
  LadderDiagnostic(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// True when the rows are exact at positions 1..3, all squares commute,
/// verticals 0, 1, 3, 4 are isomorphisms and the middle vertical is
/// independently confirmed to be one. Returns false only when some outer
/// vertical fails to be an isomorphism. Inexact rows and non-commuting
/// squares raise LadderDiagnostic.
bool five_lemma_check(const Ladder& l);

/// sub ⊕ quot, the only extension of a free group by sub. Throws Error if
/// quot has torsion.
FgAbelianGroup split_free_extension(const FgAbelianGroup& sub, const FgAbelianGroup& quot);

}  // namespace ktcp::homalg
