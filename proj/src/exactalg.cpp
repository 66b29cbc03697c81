#include "ktcp/exactalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace ktcp::exactalg {

namespace {

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const BigInt& d, const BigInt& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigInt mod_positive(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, "matrix entry count does not match its shape");
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<BigInt> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, "ragged matrix rows");
    for (long x : row) entries.emplace_back(x);
  }
  return IntegerMatrix(r, c, std::move(entries));
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const BigInt> diag, std::size_t rows,
                                      std::size_t cols) {
  require(diag.size() <= std::min(rows, cols), "diagonal longer than matrix shape");
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntegerMatrix IntegerMatrix::column(std::span<const BigInt> values) {
  return IntegerMatrix(values.size(), 1, std::vector<BigInt>(values.begin(), values.end()));
}

std::vector<BigInt> IntegerMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<BigInt> IntegerMatrix::col(std::size_t c) const {
  std::vector<BigInt> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<BigInt> IntegerMatrix::apply(std::span<const BigInt> x) const {
  require(x.size() == cols_, "vector length does not match matrix columns");
  std::vector<BigInt> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntegerMatrix IntegerMatrix::hstack(const IntegerMatrix& other) const {
  require(rows_ == other.rows_, "hstack of matrices with different row counts");
  IntegerMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntegerMatrix IntegerMatrix::col_range(std::size_t first, std::size_t count) const {
  require(first + count <= cols_, "column range out of bounds");
  IntegerMatrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product shape mismatch");
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
  IntegerMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
  return s;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
  IntegerMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

IntegerMatrix SmithForm::diagonal_matrix() const {
  return IntegerMatrix::diagonal(d, original_rows, original_cols);
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& a)
      : b_(a),
        u_(IntegerMatrix::identity(a.rows())),
        v_(IntegerMatrix::identity(a.cols())),
        m_(a.rows()),
        n_(a.cols()) {}

  SmithForm run() {
    std::size_t t = 0;
    while (t < std::min(m_, n_)) {
      const auto pivot = find_pivot(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      if (!eliminate(t)) continue;
      if (const auto bad = first_non_multiple(t)) {
        // Pull the offending row into row t; the next elimination leaves a
        // remainder strictly smaller than the current pivot.
        add_row(t, *bad, 1);
        continue;
      }
      if (b_(t, t) < 0) negate_col(t);
      ++t;
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.d.push_back(b_(i, i));
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.original_rows = m_;
    out.original_cols = n_;
    return out;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        const BigInt& x = b_(i, j);
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = std::move(ax);
        }
      }
    return best;
  }

  // Clears row t and column t off the pivot. Returns true when both are clean.
  bool eliminate(std::size_t t) {
    const BigInt p = b_(t, t);
    bool clean = true;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (b_(i, t) == 0) continue;
      add_row(i, t, -tdiv(b_(i, t), p));
      if (b_(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (b_(t, j) == 0) continue;
      add_col(j, t, -tdiv(b_(t, j), p));
      if (b_(t, j) != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> first_non_multiple(std::size_t t) const {
    const BigInt& p = b_(t, t);
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (!divides(p, b_(i, j))) return i;
    return std::nullopt;
  }

  // row dst += q * row src, mirrored on u.
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n_; ++c)
      if (b_(src, c) != 0) b_(dst, c) += q * b_(src, c);
    for (std::size_t c = 0; c < m_; ++c)
      if (u_(src, c) != 0) u_(dst, c) += q * u_(src, c);
  }

  // col dst += q * col src, mirrored on v.
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m_; ++r)
      if (b_(r, src) != 0) b_(r, dst) += q * b_(r, src);
    for (std::size_t r = 0; r < n_; ++r)
      if (v_(r, src) != 0) v_(r, dst) += q * v_(r, src);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap(b_(a, c), b_(b, c));
    for (std::size_t c = 0; c < m_; ++c) std::swap(u_(a, c), u_(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m_; ++r) std::swap(b_(r, a), b_(r, b));
    for (std::size_t r = 0; r < n_; ++r) std::swap(v_(r, a), v_(r, b));
  }

  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < m_; ++r) b_(r, c) = -b_(r, c);
    for (std::size_t r = 0; r < n_; ++r) v_(r, c) = -v_(r, c);
  }

  IntegerMatrix b_, u_, v_;
  std::size_t m_, n_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) { return SmithReducer(a).run(); }

std::size_t rank(const IntegerMatrix& a) { return smith_normal_form(a).rank(); }

BigInt determinant(const IntegerMatrix& a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  return s.v.col_range(s.rank(), a.cols() - s.rank());
}

std::optional<std::vector<BigInt>> solve(const IntegerMatrix& a, std::span<const BigInt> b) {
  require(b.size() == a.rows(), "right-hand side length does not match matrix rows");
  const SmithForm s = smith_normal_form(a);
  const std::vector<BigInt> c = s.u.apply(b);
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank()) {
      if (!divides(s.d[i], c[i])) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), s.d[i].get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

bool is_isomorphism(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) return false;
  const SmithForm s = smith_normal_form(a);
  return s.rank() == a.rows() &&
         std::all_of(s.d.begin(), s.d.end(), [](const BigInt& x) { return x == 1; });
}

// ---------------------------------------------------------------------------
// FgAbelianGroup

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<BigInt> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    require(torsion_[i] >= 2, "torsion coefficients must be at least 2");
    if (i > 0) require(divides(torsion_[i - 1], torsion_[i]), "torsion is not a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::cyclic(const BigInt& order) {
  if (order == 0) return free(1);
  return from_invariant_factors(1, std::vector<BigInt>{abs(order)});
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(std::size_t generators,
                                                      std::span<const BigInt> factors) {
  require(factors.size() <= generators, "more invariant factors than generators");
  std::vector<BigInt> torsion;
  for (const BigInt& f : factors) {
    require(f > 0, "invariant factors must be positive");
    if (f != 1) torsion.push_back(f);
  }
  return FgAbelianGroup(generators - factors.size(), std::move(torsion));
}

std::optional<BigInt> FgAbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  BigInt n = 1;
  for (const BigInt& t : torsion_) n *= t;
  return n;
}

GroupElement FgAbelianGroup::zero() const { return GroupElement(coordinate_count()); }

GroupElement FgAbelianGroup::generator(std::size_t k) const {
  require(k < coordinate_count(), "generator index out of range");
  GroupElement e = zero();
  e[k] = 1;
  return e;
}

GroupElement FgAbelianGroup::normalize(GroupElement x) const {
  require(x.size() == coordinate_count(), "element has the wrong number of coordinates");
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    x[free_rank_ + i] = mod_positive(x[free_rank_ + i], torsion_[i]);
  return x;
}

bool FgAbelianGroup::is_element(const GroupElement& x) const {
  if (x.size() != coordinate_count()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const BigInt& c = x[free_rank_ + i];
    if (c < 0 || c >= torsion_[i]) return false;
  }
  return true;
}

GroupElement FgAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  require(a.size() == coordinate_count() && b.size() == coordinate_count(),
          "element has the wrong number of coordinates");
  GroupElement s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return normalize(std::move(s));
}

GroupElement FgAbelianGroup::negate(const GroupElement& a) const { return scale(-1, a); }

GroupElement FgAbelianGroup::subtract(const GroupElement& a, const GroupElement& b) const {
  return add(a, negate(b));
}

GroupElement FgAbelianGroup::scale(const BigInt& k, const GroupElement& a) const {
  require(a.size() == coordinate_count(), "element has the wrong number of coordinates");
  GroupElement s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = k * a[i];
  return normalize(std::move(s));
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  else if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const BigInt& t : torsion_) parts.push_back("Z/" + t.get_str());
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

bool groups_equal(const FgAbelianGroup& g, const FgAbelianGroup& h) { return g == h; }

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  // The torsion parts of two chains interleave arbitrarily, so renormalize
  // through the Smith form of the combined diagonal.
  std::vector<BigInt> diag = g.torsion();
  diag.insert(diag.end(), h.torsion().begin(), h.torsion().end());
  const IntegerMatrix rel = IntegerMatrix::diagonal(diag, diag.size(), diag.size());
  const SmithForm s = smith_normal_form(rel);
  const FgAbelianGroup torsion_part = FgAbelianGroup::from_invariant_factors(diag.size(), s.d);
  return FgAbelianGroup(g.free_rank() + h.free_rank(), torsion_part.torsion());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

BigInt parse_bigint(std::string_view s) {
  s = trim(s);
  const std::string str(s);
  std::size_t digits_from = (!str.empty() && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
  if (str.size() == digits_from ||
      str.find_first_not_of("0123456789", digits_from) != std::string::npos)
    throw Error("not an integer: '" + str + "'");
  return BigInt(str[0] == '+' ? str.substr(1) : str);
}

}  // namespace

FgAbelianGroup parse_group(std::string_view text) {
  text = trim(text);
  if (text == "0") return FgAbelianGroup::trivial();
  if (text.empty()) throw Error("empty group notation");
  static constexpr std::string_view kSum = "⊕";
  std::size_t free_rank = 0;
  std::vector<BigInt> orders;
  while (true) {
    const auto cut = text.find(kSum);
    const std::string_view part = trim(text.substr(0, cut));
    if (part == "Z") {
      free_rank += 1;
    } else if (part.starts_with("Z^")) {
      const BigInt r = parse_bigint(part.substr(2));
      if (r < 1 || !r.fits_ulong_p()) throw Error("bad free rank in '" + std::string(part) + "'");
      free_rank += r.get_ui();
    } else if (part.starts_with("Z/")) {
      const BigInt d = parse_bigint(part.substr(2));
      if (d < 2) throw Error("bad torsion order in '" + std::string(part) + "'");
      orders.push_back(d);
    } else {
      throw Error("unrecognized summand '" + std::string(part) + "'");
    }
    if (cut == std::string_view::npos) break;
    text = text.substr(cut + kSum.size());
  }
  const IntegerMatrix rel = IntegerMatrix::diagonal(orders, orders.size(), orders.size());
  const FgAbelianGroup torsion_part =
      FgAbelianGroup::from_invariant_factors(orders.size(), smith_normal_form(rel).d);
  return FgAbelianGroup(free_rank, torsion_part.torsion());
}

FgAbelianGroup cokernel(const IntegerMatrix& relations) {
  return FgAbelianGroup::from_invariant_factors(relations.cols(),
                                                smith_normal_form(relations).d);
}

// ---------------------------------------------------------------------------
// Presentations

Presentation::Presentation(std::size_t generator_count, IntegerMatrix relation_rows)
    : generators(generator_count), relations(std::move(relation_rows)) {
  require(relations.cols() == generators, "relation matrix width must equal the generator count");
}

Presentation Presentation::free(std::size_t rank) { return Presentation(rank, IntegerMatrix(0, rank)); }

Presentation Presentation::cyclic(const BigInt& order) {
  return Presentation(1, IntegerMatrix(1, 1, {order}));
}

Presentation Presentation::direct_sum(const Presentation& other) const {
  const std::size_t g = generators + other.generators;
  IntegerMatrix rel(relations.rows() + other.relations.rows(), g);
  for (std::size_t r = 0; r < relations.rows(); ++r)
    for (std::size_t c = 0; c < generators; ++c) rel(r, c) = relations(r, c);
  for (std::size_t r = 0; r < other.relations.rows(); ++r)
    for (std::size_t c = 0; c < other.generators; ++c)
      rel(relations.rows() + r, generators + c) = other.relations(r, c);
  return Presentation(g, std::move(rel));
}

PresentedGroup::PresentedGroup(Presentation p) : presentation_(std::move(p)) {
  // Row span of R is invariant under u; R v = u^{-1} D, so x -> x v carries
  // the relation lattice onto the row span of D.
  SmithForm s = smith_normal_form(presentation_.relations);
  group_ = FgAbelianGroup::from_invariant_factors(presentation_.generators, s.d);
  d_ = std::move(s.d);
  v_ = std::move(s.v);
  const std::size_t n = presentation_.generators;
  v_inv_ = IntegerMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigInt> e(n);
    e[j] = 1;
    const auto col = solve(v_, e);
    require(col.has_value(), "internal error: Smith transform is not unimodular");
    for (std::size_t i = 0; i < n; ++i) v_inv_(i, j) = (*col)[i];
  }
}

GroupElement PresentedGroup::coordinates(std::span<const BigInt> x) const {
  const std::size_t n = presentation_.generators;
  require(x.size() == n, "element has the wrong number of generator coordinates");
  std::vector<BigInt> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) y[j] += x[i] * v_(i, j);
  }
  GroupElement e = group_.zero();
  const std::size_t r = d_.size();
  for (std::size_t j = r; j < n; ++j) e[j - r] = y[j];
  std::size_t t = 0;
  for (std::size_t j = 0; j < r; ++j)
    if (d_[j] != 1) e[group_.free_rank() + t++] = y[j];
  return group_.normalize(std::move(e));
}

std::vector<BigInt> PresentedGroup::representative(const GroupElement& e) const {
  require(e.size() == group_.coordinate_count(), "element has the wrong number of coordinates");
  const std::size_t n = presentation_.generators;
  const std::size_t r = d_.size();
  std::vector<BigInt> y(n);
  for (std::size_t j = r; j < n; ++j) y[j] = e[j - r];
  std::size_t t = 0;
  for (std::size_t j = 0; j < r; ++j)
    if (d_[j] != 1) y[j] = e[group_.free_rank() + t++];
  std::vector<BigInt> x(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) x[i] += y[j] * v_inv_(j, i);
  }
  return x;
}

// ---------------------------------------------------------------------------
// GroupHomomorphism

GroupHomomorphism::GroupHomomorphism(FgAbelianGroup source, FgAbelianGroup target,
                                     std::vector<GroupElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
  require(images_.size() == source_.coordinate_count(), "one image per source generator required");
  for (auto& img : images_) {
    require(img.size() == target_.coordinate_count(), "image has the wrong number of coordinates");
    img = target_.normalize(std::move(img));
  }
  for (std::size_t i = 0; i < source_.torsion().size(); ++i) {
    const GroupElement killed =
        target_.scale(source_.torsion()[i], images_[source_.free_rank() + i]);
    require(killed == target_.zero(), "torsion generator sent to an element of incompatible order");
  }
}

GroupElement GroupHomomorphism::apply(const GroupElement& x) const {
  require(x.size() == source_.coordinate_count(), "element has the wrong number of coordinates");
  GroupElement y = target_.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y = target_.add(y, target_.scale(x[i], images_[i]));
  return y;
}

// ---------------------------------------------------------------------------
// Text format

IntegerMatrix read_matrix(std::istream& in) {
  std::string rows_tok, cols_tok;
  if (!(in >> rows_tok >> cols_tok)) throw Error("matrix header 'rows cols' expected");
  const BigInt rows = parse_bigint(rows_tok), cols = parse_bigint(cols_tok);
  if (rows < 0 || cols < 0 || !rows.fits_ulong_p() || !cols.fits_ulong_p())
    throw Error("bad matrix shape");
  const std::size_t r = rows.get_ui(), c = cols.get_ui();
  std::vector<BigInt> entries;
  entries.reserve(r * c);
  for (std::size_t i = 0; i < r * c; ++i) {
    std::string tok;
    if (!(in >> tok)) throw Error("matrix has fewer entries than its shape requires");
    entries.push_back(parse_bigint(tok));
  }
  return IntegerMatrix(r, c, std::move(entries));
}

IntegerMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  IntegerMatrix m = read_matrix(in);
  std::string extra;
  if (in >> extra) throw Error("trailing data after matrix: '" + extra + "'");
  return m;
}

void write_matrix(std::ostream& out, const IntegerMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
    out << '\n';
  }
}

std::string format_matrix(const IntegerMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace ktcp::exactalg
