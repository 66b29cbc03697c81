#include "ktcp/homalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace ktcp::homalg {

using exactalg::kernel_basis;
using exactalg::solve;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

// ker(outgoing) / im(incoming), where outgoing * incoming = 0.
FgAbelianGroup subquotient(const IntegerMatrix& outgoing, const IntegerMatrix& incoming) {
  const IntegerMatrix kernel = kernel_basis(outgoing);
  IntegerMatrix relations(incoming.cols(), kernel.cols());
  for (std::size_t j = 0; j < incoming.cols(); ++j) {
    const auto coords = solve(kernel, incoming.col(j));
    require(coords.has_value(), "internal error: boundary image escapes the cycle lattice");
    for (std::size_t i = 0; i < kernel.cols(); ++i) relations(j, i) = (*coords)[i];
  }
  return exactalg::cokernel(relations);
}

std::vector<BigInt> unit_vector(std::size_t n, std::size_t k) {
  std::vector<BigInt> e(n);
  e[k] = 1;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Chain complexes

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
  require(!ranks_.empty(), "a chain complex needs at least C_0");
  require(differentials_.size() == ranks_.size() - 1, "one boundary matrix per degree 1..top required");
  for (std::size_t k = 1; k <= top(); ++k) {
    const IntegerMatrix& d = differentials_[k - 1];
    require(d.rows() == ranks_[k - 1] && d.cols() == ranks_[k],
            "boundary " + std::to_string(k) + " has the wrong shape");
  }
  for (std::size_t k = 2; k <= top(); ++k)
    require((differentials_[k - 2] * differentials_[k - 1]).is_zero(),
            "boundary composite in degree " + std::to_string(k) + " is nonzero");
}

ChainComplex ChainComplex::with_zero_boundaries(std::vector<std::size_t> ranks) {
  require(!ranks.empty(), "a chain complex needs at least C_0");
  std::vector<IntegerMatrix> ds;
  for (std::size_t k = 1; k < ranks.size(); ++k) ds.emplace_back(ranks[k - 1], ranks[k]);
  return ChainComplex(std::move(ranks), std::move(ds));
}

IntegerMatrix ChainComplex::boundary(std::size_t k) const {
  require(k <= top() + 1, "boundary degree out of range");
  if (k == 0) return IntegerMatrix(0, ranks_[0]);
  if (k == top() + 1) return IntegerMatrix(ranks_[top()], 0);
  return differentials_[k - 1];
}

FgAbelianGroup homology(const ChainComplex& c, int k) {
  require(k >= 0, "homology degree " + std::to_string(k) + " out of range");
  const auto d = static_cast<std::size_t>(k);
  if (d > c.top()) return FgAbelianGroup::trivial();
  return subquotient(c.boundary(d), c.boundary(d + 1));
}

FgAbelianGroup cohomology(const ChainComplex& c, int k) {
  require(k >= 0, "cohomology degree " + std::to_string(k) + " out of range");
  const auto d = static_cast<std::size_t>(k);
  if (d > c.top()) return FgAbelianGroup::trivial();
  return subquotient(c.boundary(d + 1).transpose(), c.boundary(d).transpose());
}

ChainComplex cpn_complex(std::size_t n) {
  std::vector<std::size_t> ranks(2 * n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) ranks[2 * k] = 1;
  return ChainComplex::with_zero_boundaries(std::move(ranks));
}

ChainComplex sphere_complex(std::size_t m) {
  require(m >= 1, "sphere dimension must be at least 1 (use cpn_complex(0) for a point)");
  std::vector<std::size_t> ranks(m + 1, 0);
  ranks[0] = 1;
  ranks[m] = 1;
  return ChainComplex::with_zero_boundaries(std::move(ranks));
}

void write_complex(std::ostream& out, const ChainComplex& c) {
  for (std::size_t k = 0; k < c.ranks().size(); ++k) out << (k ? " " : "") << c.ranks()[k];
  out << '\n';
  for (std::size_t k = 1; k <= c.top(); ++k) {
    out << '\n';
    exactalg::write_matrix(out, c.boundary(k));
  }
}

ChainComplex read_complex(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream ranks_in(line);
  std::vector<std::size_t> ranks;
  long long r = 0;
  while (ranks_in >> r) {
    require(r >= 0, "chain group ranks must be nonnegative");
    ranks.push_back(static_cast<std::size_t>(r));
  }
  require(ranks_in.eof(), "malformed ranks line");
  require(!ranks.empty(), "missing ranks line");
  std::vector<IntegerMatrix> ds;
  for (std::size_t k = 1; k < ranks.size(); ++k) ds.push_back(exactalg::read_matrix(in));
  return ChainComplex(std::move(ranks), std::move(ds));
}

// ---------------------------------------------------------------------------
// Presented groups

bool in_subgroup(const Presentation& g, const IntegerMatrix& span, std::span<const BigInt> x) {
  require(span.rows() == g.generators && x.size() == g.generators,
          "subgroup test dimensions do not match the group");
  return solve(span.hstack(g.relations.transpose()), x).has_value();
}

bool is_well_defined(const IntegerMatrix& f, const Presentation& src, const Presentation& dst) {
  require(f.rows() == dst.generators && f.cols() == src.generators, "map shape mismatch");
  const IntegerMatrix nothing(dst.generators, 0);
  for (std::size_t r = 0; r < src.relations.rows(); ++r)
    if (!in_subgroup(dst, nothing, f.apply(src.relations.row(r)))) return false;
  return true;
}

IntegerMatrix presented_kernel(const IntegerMatrix& f, const Presentation& src,
                               const Presentation& dst) {
  require(f.rows() == dst.generators && f.cols() == src.generators, "map shape mismatch");
  // x in ker f  <=>  f x + R^T y = 0 for some y.
  const IntegerMatrix k = kernel_basis(f.hstack(dst.relations.transpose()));
  IntegerMatrix out(src.generators, k.cols());
  for (std::size_t r = 0; r < src.generators; ++r)
    for (std::size_t c = 0; c < k.cols(); ++c) out(r, c) = k(r, c);
  return out;
}

bool is_group_isomorphism(const IntegerMatrix& f, const Presentation& src,
                          const Presentation& dst) {
  for (std::size_t j = 0; j < dst.generators; ++j)
    if (!in_subgroup(dst, f, unit_vector(dst.generators, j))) return false;
  const IntegerMatrix ker = presented_kernel(f, src, dst);
  const IntegerMatrix nothing(src.generators, 0);
  for (std::size_t c = 0; c < ker.cols(); ++c)
    if (!in_subgroup(src, nothing, ker.col(c))) return false;
  return true;
}

GroupSequence::GroupSequence(std::vector<Presentation> groups, std::vector<IntegerMatrix> maps)
    : groups_(std::move(groups)), maps_(std::move(maps)) {
  require(!groups_.empty() && maps_.size() + 1 == groups_.size(),
          "malformed sequence: need one map between each pair of groups");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    require(maps_[i].rows() == groups_[i + 1].generators && maps_[i].cols() == groups_[i].generators,
            "malformed sequence: map " + std::to_string(i) + " has the wrong shape");
    require(is_well_defined(maps_[i], groups_[i], groups_[i + 1]),
            "malformed sequence: map " + std::to_string(i) + " does not respect relations");
  }
}

FgAbelianGroup GroupSequence::group(std::size_t i) const {
  require(i < groups_.size(), "sequence position out of range");
  return exactalg::cokernel(groups_[i].relations);
}

bool is_exact_at(const GroupSequence& s, std::size_t i) {
  require(i >= 1 && i + 2 <= s.length(), "exactness position out of range");
  const Presentation& here = s.groups()[i];
  const Presentation& next = s.groups()[i + 1];
  const IntegerMatrix& in = s.maps()[i - 1];
  const IntegerMatrix& out = s.maps()[i];
  const IntegerMatrix nothing(next.generators, 0);
  for (std::size_t c = 0; c < in.cols(); ++c)
    if (!in_subgroup(next, nothing, out.apply(in.col(c)))) return false;
  const IntegerMatrix ker = presented_kernel(out, here, next);
  for (std::size_t c = 0; c < ker.cols(); ++c)
    if (!in_subgroup(here, in, ker.col(c))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Five Lemma

Ladder::Ladder(GroupSequence top, GroupSequence bottom, std::vector<IntegerMatrix> verticals)
    : top_(std::move(top)), bottom_(std::move(bottom)), verticals_(std::move(verticals)) {
  require(top_.length() == 5 && bottom_.length() == 5, "ladder rows must have length 5");
  require(verticals_.size() == 5, "ladder needs five vertical maps");
  for (std::size_t j = 0; j < 5; ++j)
    require(is_well_defined(verticals_[j], top_.groups()[j], bottom_.groups()[j]),
            "vertical map " + std::to_string(j) + " is malformed");
}

bool five_lemma_check(const Ladder& l) {
  using Kind = LadderDiagnostic::Kind;
  for (std::size_t i = 1; i <= 3; ++i) {
    if (!is_exact_at(l.top(), i))
      throw LadderDiagnostic(Kind::InexactRow, "top row is not exact at position " + std::to_string(i));
    if (!is_exact_at(l.bottom(), i))
      throw LadderDiagnostic(Kind::InexactRow,
                             "bottom row is not exact at position " + std::to_string(i));
  }
  const auto& v = l.verticals();
  for (std::size_t j = 0; j < 4; ++j) {
    const IntegerMatrix diff = l.bottom().maps()[j] * v[j] - v[j + 1] * l.top().maps()[j];
    const Presentation& target = l.bottom().groups()[j + 1];
    const IntegerMatrix nothing(target.generators, 0);
    for (std::size_t c = 0; c < diff.cols(); ++c)
      if (!in_subgroup(target, nothing, diff.col(c)))
        throw LadderDiagnostic(Kind::NonCommutingSquare,
                               "square " + std::to_string(j) + " does not commute");
  }
  const auto iso = [&](std::size_t j) {
    return is_group_isomorphism(v[j], l.top().groups()[j], l.bottom().groups()[j]);
  };
  if (!(iso(0) && iso(1) && iso(3) && iso(4))) return false;
  if (!iso(2))
    throw LadderDiagnostic(Kind::ConsistencyViolation,
                           "hypotheses of the Five Lemma hold but the middle map is not an isomorphism");
  return true;
}

FgAbelianGroup split_free_extension(const FgAbelianGroup& sub, const FgAbelianGroup& quot) {
  require(quot.is_free(), "quotient " + quot.to_string() + " has torsion; the extension need not split");
  return exactalg::direct_sum(sub, quot);
}

}  // namespace ktcp::homalg
