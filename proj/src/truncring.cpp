#include "ktcp/truncring.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ktcp::truncring {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Appends one signed term "coefficient*monomial" to a sum being printed.
void append_term(std::string& out, const Rational& c, const std::string& monomial) {
  const bool negative = c < 0;
  const Rational mag = negative ? Rational(-c) : c;
  std::string body;
  if (monomial.empty()) body = rational_str(mag);
  else if (mag == 1) body = monomial;
  else body = rational_str(mag) + "*" + monomial;
  if (out.empty()) out = negative ? "-" + body : body;
  else out += (negative ? " - " : " + ") + body;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncPoly

TruncPoly::TruncPoly(std::size_t order) : order_(order), coeffs_(order + 1) {}

TruncPoly::TruncPoly(std::size_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  require(coeffs_.size() == order_ + 1, "truncated polynomial needs exactly order + 1 coefficients");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncPoly TruncPoly::constant(std::size_t order, const Rational& c) {
  TruncPoly p(order);
  p.coeffs_[0] = canon(c);
  return p;
}

TruncPoly TruncPoly::monomial(std::size_t order, std::size_t k, const Rational& c) {
  TruncPoly p(order);
  if (k <= order) p.coeffs_[k] = canon(c);
  return p;
}

Rational TruncPoly::coeff(std::size_t k) const { return k <= order_ ? coeffs_[k] : Rational(0); }

bool TruncPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool TruncPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

TruncPoly TruncPoly::with_order(std::size_t order) const {
  TruncPoly p(order);
  for (std::size_t k = 0; k <= std::min(order, order_); ++k) p.coeffs_[k] = coeffs_[k];
  return p;
}

TruncPoly TruncPoly::operator-() const { return scaled(-1); }

TruncPoly TruncPoly::scaled(const Rational& c) const {
  TruncPoly p = *this;
  const Rational k = canon(c);
  for (auto& x : p.coeffs_) x *= k;
  return p;
}

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
  require(a.order_ == b.order_, "truncation orders differ");
  TruncPoly s = a;
  for (std::size_t k = 0; k <= a.order_; ++k) s.coeffs_[k] += b.coeffs_[k];
  return s;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
  require(a.order_ == b.order_, "truncation orders differ");
  TruncPoly s = a;
  for (std::size_t k = 0; k <= a.order_; ++k) s.coeffs_[k] -= b.coeffs_[k];
  return s;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  require(a.order_ == b.order_, "truncation orders differ");
  TruncPoly p(a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return p;
}

std::string TruncPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k <= order_; ++k) {
    if (coeffs_[k] == 0) continue;
    const std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    append_term(out, coeffs_[k], mono);
  }
  return out.empty() ? "0" : out;
}

TruncPoly pow(const TruncPoly& p, std::size_t k) {
  TruncPoly result = TruncPoly::constant(p.order(), 1);
  TruncPoly base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

TruncPoly exp_nilpotent(const TruncPoly& p) {
  if (p.coeff(0) != 0) throw Error("exp_nilpotent needs a zero constant term, got " + p.to_string());
  TruncPoly sum = TruncPoly::constant(p.order(), 1);
  TruncPoly term = sum;
  for (std::size_t k = 1; k <= p.order(); ++k) {
    term = (term * p).scaled(Rational(1, static_cast<unsigned long>(k)));
    sum = sum + term;
  }
  return sum;
}

TruncPoly parse_trunc_poly(std::string_view text, std::size_t order) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto fail = [&](const std::string& why) -> void {
    throw Error("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  const auto read_digits = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  TruncPoly result(order);
  bool first = true;
  skip_ws();
  if (pos == text.size()) fail("empty input");
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) fail("empty input");
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff = 1;
    bool have_number = false;
    const std::string num = read_digits();
    if (!num.empty()) {
      have_number = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        const std::string den = read_digits();
        if (den.empty() || BigInt(den) == 0) fail("bad denominator");
        coeff = Rational(BigInt(num), BigInt(den));
        coeff.canonicalize();
      } else {
        coeff = Rational(BigInt(num));
      }
      skip_ws();
    }
    std::size_t degree = 0;
    bool have_x = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_number) fail("'*' without a coefficient");
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'x') fail("expected 'x' after '*'");
    }
    if (pos < text.size() && text[pos] == 'x') {
      have_x = true;
      ++pos;
      degree = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        const std::string e = read_digits();
        if (e.empty()) fail("missing exponent");
        const BigInt big_e(e);
        degree = big_e.fits_ulong_p() ? big_e.get_ui() : order + 1;
      }
    }
    if (!have_number && !have_x) fail("expected a term");
    if (negative) coeff = -coeff;
    if (degree <= order) result = result + TruncPoly::monomial(order, degree, coeff);
  }
  return result;
}

exactalg::IntegerMatrix pairing_matrix(std::size_t n) {
  exactalg::IntegerMatrix m(n + 1, n + 1);
  for (std::size_t p = 0; p <= n; ++p)
    for (std::size_t q = 0; q <= n; ++q) {
      const Rational c = (TruncPoly::monomial(n, p) * TruncPoly::monomial(n, q)).coeff(n);
      m(p, q) = c.get_num();
    }
  return m;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::size_t variable_count) : variable_count_(variable_count) {}

MultiPoly MultiPoly::constant(std::size_t variable_count, const Rational& c) {
  MultiPoly p(variable_count);
  p.add_term(Exponents(variable_count, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variable_count, std::size_t i) {
  require(i < variable_count, "variable index out of range");
  Exponents e(variable_count, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& raw) {
  const Rational c = canon(raw);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly p(variable_count_);
  const Rational k = canon(c);
  if (k == 0) return p;
  for (const auto& [e, x] : terms_) p.terms_.emplace(e, x * k);
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require(a.variable_count_ == b.variable_count_, "variable counts differ");
  MultiPoly s = a;
  for (const auto& [e, c] : b.terms_) s.add_term(e, c);
  return s;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require(a.variable_count_ == b.variable_count_, "variable counts differ");
  MultiPoly p(a.variable_count_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::truncated(unsigned max_degree) const {
  MultiPoly p(variable_count_);
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    if (d <= max_degree) p.terms_.emplace(e, c);
  }
  return p;
}

std::string MultiPoly::to_string(std::string_view prefix) const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += std::string(prefix) + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.variable_count(), 1);
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

// Sum over terms of c * prod values[i]^e_i, with powers cached per variable.
template <class Ring, class Scale>
Ring evaluate_terms(const MultiPoly& p, std::span<const Ring> values, Ring zero, Ring one,
                    Scale scale) {
  require(values.size() == p.variable_count(), "one value per variable required");
  std::vector<std::vector<Ring>> powers(values.size(), std::vector<Ring>{one});
  const auto power = [&](std::size_t i, unsigned k) -> const Ring& {
    auto& cache = powers[i];
    while (cache.size() <= k) cache.push_back(cache.back() * values[i]);
    return cache[k];
  };
  Ring sum = zero;
  for (const auto& [e, c] : p.terms()) {
    Ring term = one;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    sum = sum + scale(term, c);
  }
  return sum;
}

}  // namespace

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> values) {
  require(!values.empty() || p.variable_count() == 0, "substitution needs at least one value");
  const std::size_t vars = values.empty() ? 0 : values.front().variable_count();
  for (const auto& v : values) require(v.variable_count() == vars, "substituted values disagree on variable count");
  return evaluate_terms<MultiPoly>(p, values, MultiPoly(vars), MultiPoly::constant(vars, 1),
                                   [](const MultiPoly& t, const Rational& c) { return t.scaled(c); });
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> raw_values) {
  std::vector<Rational> values;
  for (const auto& v : raw_values) values.push_back(canon(v));
  return evaluate_terms<Rational>(p, std::span<const Rational>(values), Rational(0), Rational(1),
                                  [](const Rational& t, const Rational& c) { return Rational(t * c); });
}

TruncPoly evaluate(const MultiPoly& p, std::span<const TruncPoly> values) {
  require(!values.empty(), "evaluation in the truncated ring needs at least one value");
  const std::size_t order = values.front().order();
  return evaluate_terms<TruncPoly>(p, values, TruncPoly(order), TruncPoly::constant(order, 1),
                                   [](const TruncPoly& t, const Rational& c) { return t.scaled(c); });
}

MultiPoly elementary_symmetric(std::size_t i, std::size_t n) {
  MultiPoly e(n);
  if (i > n) return e;
  // Sum over i-element subsets of {1..n}, enumerated by a bitmask walk.
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(i), true);
  do {
    MultiPoly::Exponents exps(n, 0);
    for (std::size_t k = 0; k < n; ++k) exps[k] = chosen[k] ? 1 : 0;
    e = e + MultiPoly::monomial(std::move(exps));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return e;
}

MultiPoly power_sum(std::size_t k, std::size_t n) {
  MultiPoly p(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly::Exponents e(n, 0);
    e[i] = static_cast<unsigned>(k);
    p = p + MultiPoly::monomial(std::move(e));
  }
  return p;
}

}  // namespace ktcp::truncring
