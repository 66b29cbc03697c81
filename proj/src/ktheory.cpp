#include "ktcp/ktheory.hpp"

#include <charconv>
#include <numeric>
#include <utility>

namespace ktcp::ktheory {

using exactalg::Presentation;
using homalg::GroupSequence;
using homalg::Ladder;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

std::string cp(std::size_t k) { return "CP^" + std::to_string(k); }
std::string sphere_name(std::size_t i) { return "S^" + std::to_string(i); }

long parity(long q) { return ((q % 2) + 2) % 2; }

}  // namespace

Space Space::sphere(std::size_t m) {
  require(m >= 1, "sphere dimension must be at least 1");
  return {Kind::Sphere, m};
}

std::string Space::to_string() const {
  switch (kind) {
    case Kind::Point: return "point";
    case Kind::CPn: return "cpn:" + std::to_string(parameter);
    case Kind::Sphere: return "sphere:" + std::to_string(parameter);
  }
  return {};
}

Space parse_space(std::string_view text) {
  if (text == "point") return Space::point();
  const auto colon = text.find(':');
  require(colon != std::string_view::npos, "space must be \"point\", \"cpn:N\" or \"sphere:M\", got \"" +
                                               std::string(text) + "\"");
  const std::string_view kind = text.substr(0, colon), num = text.substr(colon + 1);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  require(ec == std::errc() && end == num.data() + num.size() && !num.empty(),
          "bad dimension in space \"" + std::string(text) + "\"");
  if (kind == "cpn") return Space::cpn(value);
  if (kind == "sphere") return Space::sphere(value);
  throw Error("unknown space kind \"" + std::string(kind) + "\"");
}

KClass::KClass(std::size_t n, std::vector<BigInt> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  require(coeffs_.size() == n_ + 1, "a class in K(CP^n) needs n + 1 coefficients");
}

KClass KClass::one(std::size_t n) { return gamma_power(n, 0); }
KClass KClass::gamma(std::size_t n) { return gamma_power(n, 1); }
KClass KClass::zeta(std::size_t n) { return one(n) + gamma(n); }

KClass KClass::gamma_power(std::size_t n, std::size_t k) {
  KClass c = zero(n);
  if (k <= n) c.coeffs_[k] = 1;
  return c;
}

KClass operator+(const KClass& a, const KClass& b) {
  require(a.n_ == b.n_, "classes live on different projective spaces");
  KClass c = a;
  for (std::size_t i = 0; i <= a.n_; ++i) c.coeffs_[i] += b.coeffs_[i];
  return c;
}

KClass operator-(const KClass& a, const KClass& b) {
  require(a.n_ == b.n_, "classes live on different projective spaces");
  KClass c = a;
  for (std::size_t i = 0; i <= a.n_; ++i) c.coeffs_[i] -= b.coeffs_[i];
  return c;
}

KClass operator*(const KClass& a, const KClass& b) {
  require(a.n_ == b.n_, "classes live on different projective spaces");
  KClass c = KClass::zero(a.n_);
  for (std::size_t i = 0; i <= a.n_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.n_; ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return c;
}

std::string KClass::to_string() const {
  std::string out;
  for (std::size_t k = 0; k <= n_; ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool show = k == 0 || mag != 1;
    if (show) out += mag.get_str();
    if (k >= 1) out += "γ";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

KClass pow(const KClass& a, std::size_t k) {
  KClass result = KClass::one(a.ambient()), base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    base = base * base;
  }
  return result;
}

TruncPoly chern_character_map(const KClass& a) {
  const std::size_t n = a.ambient();
  const TruncPoly ch_gamma = truncring::exp_nilpotent(TruncPoly::x(n)) - TruncPoly::constant(n, 1);
  // Horner in ch(γ).
  TruncPoly acc(n);
  for (std::size_t k = n + 1; k-- > 0;) acc = acc * ch_gamma + TruncPoly::constant(n, Rational(a.coeffs()[k]));
  return acc;
}

RationalMatrix ch_matrix(std::size_t n) {
  RationalMatrix m(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    const TruncPoly ch = chern_character_map(KClass::gamma_power(n, k));
    for (std::size_t r = 0; r <= n; ++r) m[r][k] = ch.coeff(r);
  }
  return m;
}

bool is_lower_unitriangular(const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != m.size()) return false;
    if (m[r][r] != 1) return false;
    for (std::size_t c = r + 1; c < m.size(); ++c)
      if (m[r][c] != 0) return false;
  }
  return true;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  // Clear denominators row by row, then use the integer determinant.
  IntegerMatrix scaled(n, n);
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    require(m[r].size() == n, "determinant needs a square matrix");
    BigInt l = 1;
    for (const auto& x : m[r]) l = lcm(l, BigInt(x.get_den()));
    for (std::size_t c = 0; c < n; ++c) scaled(r, c) = m[r][c].get_num() * (l / m[r][c].get_den());
    scale *= l;
  }
  Rational d(exactalg::determinant(scaled), scale);
  d.canonicalize();
  return d;
}

FgAbelianGroup reduced_sphere_k(std::size_t i) {
  return i % 2 == 0 ? FgAbelianGroup::free(1) : FgAbelianGroup::trivial();
}

bool KGroupTable::is_periodic() const {
  for (const auto& [q, g] : entries) {
    const auto it = entries.find(q + 2);
    if (it != entries.end() && !exactalg::groups_equal(g, it->second)) return false;
  }
  return true;
}

namespace {

// Folds positive degrees onto {0, -1} by periodicity.
long fold_degree(long q) { return q > 0 ? -parity(q) : q; }

// K^{-d}(X) = K~(Σ^d(X_+)) = K~(S^d) ⊕ K~(Σ^d X), read off the axiom table.
FgAbelianGroup suspension_formula(long q, std::optional<std::size_t> sphere_dim) {
  const std::size_t d = static_cast<std::size_t>(-fold_degree(q));
  FgAbelianGroup g = reduced_sphere_k(d);
  if (sphere_dim) g = exactalg::direct_sum(g, reduced_sphere_k(d + *sphere_dim));
  return g;
}

// Entries for q in [q_min, q_max]; CP^n replays the induction once.
std::map<long, FgAbelianGroup> entries_for(const Space& space, long q_min, long q_max) {
  std::map<long, FgAbelianGroup> out;
  std::optional<InductionTrace> trace;
  if (space.kind == Space::Kind::CPn && space.parameter >= 1) trace = replay_induction(space.parameter);
  for (long q = q_min; q <= q_max; ++q) {
    switch (space.kind) {
      case Space::Kind::Point: out.emplace(q, suspension_formula(q, std::nullopt)); break;
      case Space::Kind::Sphere: out.emplace(q, suspension_formula(q, space.parameter)); break;
      case Space::Kind::CPn:
        if (!trace)
          out.emplace(q, suspension_formula(q, std::nullopt));  // CP^0 is a point
        else
          out.emplace(q, parity(q) == 0 ? trace->k0 : trace->k1);
        break;
    }
  }
  return out;
}

}  // namespace

FgAbelianGroup k_groups(const Space& space, long q) { return entries_for(space, q, q).at(q); }

KGroupTable k_group_table(const Space& space, long q_min, long q_max) {
  require(q_min <= q_max, "empty degree range");
  KGroupTable table{space, entries_for(space, q_min, q_max)};
  require(table.is_periodic(), "K-group table of " + space.to_string() + " is not 2-periodic");
  return table;
}

namespace {

IntegerMatrix zero_map(std::size_t dst, std::size_t src) { return IntegerMatrix(dst, src); }

// Rank-r free presentation with a name and provenance, for building windows.
struct Term {
  std::string name;
  std::size_t rank;
  std::string source;
};

TraceStep check_window(std::string label, std::string rule, const std::vector<Term>& terms,
                       const std::vector<IntegerMatrix>& top_maps, const std::vector<IntegerMatrix>& bottom_maps,
                       const std::vector<std::size_t>& bottom_ranks, const std::vector<IntegerMatrix>& verticals,
                       const FgAbelianGroup& conclusion) {
  std::vector<Presentation> top_groups, bottom_groups;
  for (const auto& t : terms) top_groups.push_back(Presentation::free(t.rank));
  for (std::size_t r : bottom_ranks) bottom_groups.push_back(Presentation::free(r));
  GroupSequence top(top_groups, top_maps);
  GroupSequence bottom(bottom_groups, bottom_maps);

  TraceStep step;
  step.label = std::move(label);
  step.rule = std::move(rule);
  for (std::size_t i = 0; i < terms.size(); ++i)
    step.window.push_back({terms[i].name, top.group(i).to_string(), terms[i].source});
  for (std::size_t i = 1; i <= 3; ++i) step.exact.push_back(homalg::is_exact_at(top, i));
  step.five_lemma = homalg::five_lemma_check(Ladder(top, bottom, verticals));
  require(exactalg::groups_equal(top.group(2), conclusion), "derived group disagrees with the model in " + step.label);
  step.conclusion = conclusion.to_string();
  return step;
}

}  // namespace

bool InductionTrace::all_checks_pass() const {
  for (const auto& s : steps) {
    for (bool e : s.exact)
      if (!e) return false;
    if (s.five_lemma.has_value() && !*s.five_lemma) return false;
    if (s.rule != "base_case" && (s.exact.size() != 3 || !s.five_lemma.has_value())) return false;
  }
  return true;
}

InductionTrace replay_induction(std::size_t n) {
  require(n >= 1, "the induction starts at CP^1");
  InductionTrace trace;
  trace.n = n;

  // CP^1 = S^2.
  FgAbelianGroup reduced = reduced_sphere_k(2);
  FgAbelianGroup k1 = reduced_sphere_k(3);
  trace.steps.push_back({"K~(" + cp(1) + ")", "base_case", {{"K~(" + sphere_name(2) + ")", reduced.to_string(), "axiom"}},
                         {}, std::nullopt, reduced.to_string()});
  trace.steps.push_back({"K^1(" + cp(1) + ")", "base_case", {{"K~(" + sphere_name(3) + ")", k1.to_string(), "axiom"}},
                         {}, std::nullopt, k1.to_string()});

  for (std::size_t k = 1; k < n; ++k) {
    require(reduced.is_free() && reduced.free_rank() == k, "induction hypothesis on K~(" + cp(k) + ") failed");
    require(k1.is_trivial(), "induction hypothesis on K^1(" + cp(k) + ") failed");

    // K~(ΣCP^k) -> K~(S^{2k+2}) -p*-> K~(CP^{k+1}) -i*-> K~(CP^k) -> K~(S^{2k+3}).
    // K~(CP^{k+1}) is modelled on γ, ..., γ^{k+1}; p*(β) = γ^{k+1} and i* truncates.
    const FgAbelianGroup sphere = reduced_sphere_k(2 * k + 2);
    const FgAbelianGroup next_sphere = reduced_sphere_k(2 * k + 3);
    require(sphere.free_rank() == 1 && sphere.is_free() && next_sphere.is_trivial(), "sphere axiom table mismatch");
    const std::size_t a = k1.coordinate_count();  // K~(ΣCP^k) = K^1(CP^k) = 0
    const std::vector<Term> terms{{"K~(Σ" + cp(k) + ")", a, "hypothesis"},
                                  {"K~(" + sphere_name(2 * k + 2) + ")", 1, "axiom"},
                                  {"K~(" + cp(k + 1) + ")", k + 1, "model"},
                                  {"K~(" + cp(k) + ")", k, "hypothesis"},
                                  {"K~(" + sphere_name(2 * k + 3) + ")", 0, "axiom"}};
    IntegerMatrix p_star(k + 1, 1);
    p_star(k, 0) = 1;
    IntegerMatrix i_star(k, k + 1);
    for (std::size_t j = 0; j < k; ++j) i_star(j, j) = 1;
    // Bottom row: 0 -> Z -> Z ⊕ Z^k -> Z^k -> 0.
    IntegerMatrix incl(k + 1, 1);
    incl(0, 0) = 1;
    IntegerMatrix proj(k, k + 1);
    for (std::size_t j = 0; j < k; ++j) proj(j, j + 1) = 1;
    // γ^{k+1} goes to the Z summand, γ^j to the j-th coordinate of Z^k.
    IntegerMatrix middle(k + 1, k + 1);
    middle(0, k) = 1;
    for (std::size_t j = 0; j < k; ++j) middle(j + 1, j) = 1;

    reduced = homalg::split_free_extension(sphere, reduced);
    trace.steps.push_back(check_window(
        "K~(" + cp(k + 1) + ")", "split_free_extension", terms,
        {zero_map(1, a), p_star, i_star, zero_map(0, k)}, {zero_map(1, a), incl, proj, zero_map(0, k)},
        {a, 1, k + 1, k, 0},
        {IntegerMatrix::identity(a), IntegerMatrix::identity(1), middle, IntegerMatrix::identity(k),
         IntegerMatrix::identity(0)},
        reduced));

    // K^0(CP^k) -> K^1(CP^{k+1}, CP^k) -> K^1(CP^{k+1}) -> K^1(CP^k) -> K^0(CP^{k+1}, CP^k).
    const std::size_t k0_rank = k + 1;
    const std::vector<Term> odd_terms{{"K^0(" + cp(k) + ")", k0_rank, "hypothesis"},
                                      {"K~(" + sphere_name(2 * k + 3) + ")", 0, "axiom"},
                                      {"K^1(" + cp(k + 1) + ")", 0, "model"},
                                      {"K^1(" + cp(k) + ")", 0, "hypothesis"},
                                      {"K~(" + sphere_name(2 * k + 2) + ")", 1, "axiom"}};
    k1 = FgAbelianGroup::trivial();
    trace.steps.push_back(check_window(
        "K^1(" + cp(k + 1) + ")", "pinched_between_zeros", odd_terms,
        {zero_map(0, k0_rank), zero_map(0, 0), zero_map(0, 0), zero_map(1, 0)},
        {zero_map(0, k0_rank), zero_map(0, 0), zero_map(0, 0), zero_map(1, 0)}, {k0_rank, 0, 0, 0, 1},
        {IntegerMatrix::identity(k0_rank), IntegerMatrix::identity(0), IntegerMatrix::identity(0),
         IntegerMatrix::identity(0), IntegerMatrix::identity(1)},
        k1));
  }

  trace.reduced_k0 = reduced;
  trace.k0 = exactalg::direct_sum(reduced, FgAbelianGroup::free(1));
  trace.k1 = k1;
  require(trace.all_checks_pass(), "induction replay failed a check");
  return trace;
}

nlohmann::json to_json(const InductionTrace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    nlohmann::json window = nlohmann::json::array();
    for (const auto& w : s.window) window.push_back({{"name", w.name}, {"group", w.group}, {"source", w.source}});
    nlohmann::json step{{"label", s.label}, {"rule", s.rule}, {"window", window}, {"exact", s.exact},
                        {"conclusion", s.conclusion}};
    step["five_lemma"] = s.five_lemma.has_value() ? nlohmann::json(*s.five_lemma) : nlohmann::json(nullptr);
    steps.push_back(std::move(step));
  }
  return {{"n", t.n},
          {"reduced_k0", t.reduced_k0.to_string()},
          {"k0", t.k0.to_string()},
          {"k1", t.k1.to_string()},
          {"steps", steps}};
}

InductionTrace trace_from_json(const nlohmann::json& j) {
  try {
    InductionTrace t;
    t.n = j.at("n").get<std::size_t>();
    t.reduced_k0 = exactalg::parse_group(j.at("reduced_k0").get<std::string>());
    t.k0 = exactalg::parse_group(j.at("k0").get<std::string>());
    t.k1 = exactalg::parse_group(j.at("k1").get<std::string>());
    for (const auto& s : j.at("steps")) {
      TraceStep step;
      step.label = s.at("label").get<std::string>();
      step.rule = s.at("rule").get<std::string>();
      for (const auto& w : s.at("window"))
        step.window.push_back(
            {w.at("name").get<std::string>(), w.at("group").get<std::string>(), w.at("source").get<std::string>()});
      step.exact = s.at("exact").get<std::vector<bool>>();
      if (!s.at("five_lemma").is_null()) step.five_lemma = s.at("five_lemma").get<bool>();
      step.conclusion = s.at("conclusion").get<std::string>();
      t.steps.push_back(std::move(step));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed trace document: ") + e.what());
  }
}

KClass bott(const BigInt& a1, const BigInt& a2) {
  KClass one = KClass::one(1), zeta = KClass::zeta(1);
  return KClass(1, {a1, 0}) * one + KClass(1, {a2, 0}) * zeta;
}

IntegerMatrix bott_matrix() {
  const KClass b1 = bott(1, 0), b2 = bott(0, 1);
  IntegerMatrix m(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    m(r, 0) = b1.coeffs()[r];
    m(r, 1) = b2.coeffs()[r];
  }
  return m;
}

bool bott_check() { return exactalg::is_isomorphism(bott_matrix()); }

bool SphereChCertificate::certifies_integral_image() const {
  if (abs(generator_image) != 1 || cpn_top_coefficient != generator_image) return false;
  if (propagation.size() != n) return false;
  for (const auto& c : propagation)
    if (c != generator_image) return false;
  return true;
}

SphereChCertificate ch_image_on_sphere(std::size_t n) {
  require(n >= 1, "spheres S^{2n} need n >= 1");
  SphereChCertificate cert;
  cert.n = n;
  // n = 1: S^2 = CP^1, β = γ, ch(γ) = x.
  const Rational base = chern_character_map(KClass::gamma(1)).coeff(1);
  // Σ^2 multiplies by the generator of K~(S^2) under Bott; ch is
  // multiplicative, so each step scales the coefficient by ch(γ)'s x-term.
  Rational c = base;
  cert.propagation.push_back(c);
  for (std::size_t m = 2; m <= n; ++m) {
    c *= base;
    cert.propagation.push_back(c);
  }
  cert.generator_image = c;
  cert.cpn_top_coefficient = chern_character_map(KClass::gamma_power(n, n)).coeff(n);
  return cert;
}

}  // namespace ktcp::ktheory
