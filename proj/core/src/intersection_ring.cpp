#include "conecalc/intersection_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conecalc/bundles.hpp"
#include "conecalc/errors.hpp"

namespace conecalc {

// ---------------------------------------------------------------------------
// Formal polynomial arithmetic

namespace {

void accumulate(Polynomial& p, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Exponents mul_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

Polynomial add(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b) accumulate(out, e, c);
  return out;
}

Polynomial scale(const Polynomial& a, const Rational& s) {
  Polynomial out;
  if (s == 0) return out;
  for (const auto& [e, c] : a) out.emplace(e, c * s);
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) accumulate(out, mul_exponents(ea, eb), ca * cb);
  return out;
}

Polynomial power(const Polynomial& a, int e) {
  if (e < 0) throw InvalidInput("negative exponent");
  if (a.empty()) {
    if (e == 0) throw InvalidInput("0^0 is undefined");
    return {};
  }
  Polynomial out = monomial(Exponents(a.begin()->first.size(), 0));
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

Polynomial monomial(const Exponents& e, const Rational& coeff) {
  Polynomial p;
  accumulate(p, e, coeff);
  return p;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, std::size_t width) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (e.size() != images.size()) throw DimensionMismatch("substitution image count mismatch");
    Polynomial term = monomial(Exponents(width, 0), c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = multiply(term, power(images[i], e[i]));
    }
    out = add(out, term);
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntersectionRing

IntersectionRing::IntersectionRing(std::string name, std::vector<Generator> generators,
                                   std::vector<RewriteRule> rules, Exponents top, int dim)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      rules_(std::move(rules)),
      top_(std::move(top)),
      dim_(dim) {
  const std::size_t n = generators_.size();
  if (top_.size() != n) throw InvariantViolation(name_ + ": top monomial has wrong arity");
  for (const auto& g : generators_)
    if (g.degree < 1) throw InvariantViolation(name_ + ": generator degrees must be positive");
  for (const auto& rule : rules_) {
    if (rule.lhs.size() != n) throw InvariantViolation(name_ + ": rule arity mismatch");
    const int lhs_deg = weighted_degree(rule.lhs);
    for (const auto& [e, c] : rule.rhs) {
      if (e.size() != n || weighted_degree(e) != lhs_deg || !(e < rule.lhs)) {
        throw InvariantViolation(name_ + ": rule " + monomial_label(rule.lhs) +
                                 " is not homogeneous and decreasing");
      }
    }
  }
  if (weighted_degree(top_) != dim_) throw InvariantViolation(name_ + ": top monomial not of top degree");

  // Enumerate normal monomials degree by degree.
  bases_.assign(dim_ + 1, {});
  Exponents current(n, 0);
  auto enumerate = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var == n) {
      if (remaining == 0 && is_normal(current)) bases_[weighted_degree(current)].push_back(current);
      return;
    }
    for (int e = remaining / generators_[var].degree; e >= 0; --e) {
      current[var] = e;
      self(self, var + 1, remaining - e * generators_[var].degree);
    }
    current[var] = 0;
  };
  for (int k = 0; k <= dim_; ++k) enumerate(enumerate, 0, k);
  for (auto& b : bases_) std::sort(b.begin(), b.end(), std::greater<>());

  if (bases_[dim_].size() != 1 || bases_[dim_].front() != top_) {
    throw InvariantViolation(name_ + ": top-degree part is not spanned by " + monomial_label(top_));
  }
}

std::size_t IntersectionRing::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw InvalidInput("unknown generator '" + std::string(name) + "' in ring " + name_);
}

Polynomial IntersectionRing::generator(std::string_view name) const {
  Exponents e(generators_.size(), 0);
  e[generator_index(name)] = 1;
  return monomial(e);
}

int IntersectionRing::weighted_degree(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * generators_[i].degree;
  return d;
}

bool IntersectionRing::is_normal(const Exponents& e) const {
  return std::none_of(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return divides(r.lhs, e); });
}

const std::vector<Exponents>& IntersectionRing::basis(int k) const {
  if (k < 0 || k > dim_) {
    throw DegreeMismatch("degree " + std::to_string(k) + " outside [0, " + std::to_string(dim_) + "]");
  }
  return bases_[k];
}

std::vector<std::string> IntersectionRing::basis_labels(int k) const {
  std::vector<std::string> out;
  for (const auto& e : basis(k)) out.push_back(monomial_label(e));
  return out;
}

NumClass IntersectionRing::normal_form(const Polynomial& expr, std::optional<int> degree, RuleChoice choice,
                                       std::mt19937_64* rng) const {
  std::optional<int> seen;
  for (const auto& [e, c] : expr) {
    if (e.size() != generators_.size()) throw DimensionMismatch("expression arity does not match ring");
    const int d = weighted_degree(e);
    if (seen && *seen != d) throw DegreeMismatch("mixed-degree expression");
    seen = d;
  }
  if (degree && seen && *degree != *seen) {
    throw DegreeMismatch("expression has degree " + std::to_string(*seen) + ", expected " +
                         std::to_string(*degree));
  }
  NumClass out;
  out.degree = degree.value_or(seen.value_or(0));
  if (out.degree > dim_) return out;  // N^k = 0 above the dimension

  // Rules strictly decrease monomials in lex order, so repeatedly expanding
  // the largest pending monomial touches each monomial at most once.
  std::map<Exponents, Rational, std::greater<>> pending;
  for (const auto& [e, c] : expr)
    if (c != 0) pending[e] += c;
  std::vector<const RewriteRule*> applicable;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Exponents& mono = node.key();
    const Rational& coeff = node.mapped();
    if (coeff == 0) continue;
    applicable.clear();
    for (const auto& r : rules_)
      if (divides(r.lhs, mono)) applicable.push_back(&r);
    if (applicable.empty()) {
      out.terms.emplace(mono, coeff);
      continue;
    }
    const RewriteRule* rule = applicable.front();
    if (choice == RuleChoice::Random && rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
      rule = applicable[pick(*rng)];
    } else {
      auto max_exp = [](const RewriteRule* r) { return *std::max_element(r->lhs.begin(), r->lhs.end()); };
      for (const auto* r : applicable)
        if (max_exp(r) > max_exp(rule)) rule = r;
    }
    Exponents quotient(mono.size());
    for (std::size_t i = 0; i < mono.size(); ++i) quotient[i] = mono[i] - rule->lhs[i];
    for (const auto& [e, c] : rule->rhs) {
      auto& slot = pending[mul_exponents(e, quotient)];
      slot += c * coeff;
    }
  }
  return out;
}

NumClass IntersectionRing::normal_form(const NumClass& cls) const {
  Polynomial p(cls.terms.begin(), cls.terms.end());
  return normal_form(p, cls.degree);
}

Rational IntersectionRing::degree(const NumClass& cls) const {
  if (cls.degree != dim_) {
    throw DegreeMismatch("degree evaluation needs a class of degree " + std::to_string(dim_) + ", got " +
                         std::to_string(cls.degree));
  }
  Rational value = 0;
  for (const auto& [e, c] : normal_form(cls).terms) {
    if (e != top_) throw InvariantViolation(name_ + ": top-degree class not a multiple of the top monomial");
    value += c;
  }
  return value;
}

Rational IntersectionRing::degree(const Polynomial& expr) const { return degree(normal_form(expr, dim_)); }

NumClass IntersectionRing::product(const NumClass& a, const NumClass& b) const {
  Polynomial pa(a.terms.begin(), a.terms.end());
  Polynomial pb(b.terms.begin(), b.terms.end());
  return normal_form(multiply(pa, pb), a.degree + b.degree);
}

QVector IntersectionRing::coordinates(const NumClass& cls) const {
  const auto& b = basis(cls.degree);
  const NumClass nf = normal_form(cls);
  QVector out(b.size(), 0);
  for (const auto& [e, c] : nf.terms) {
    auto it = std::find(b.begin(), b.end(), e);
    if (it == b.end()) throw InvariantViolation(name_ + ": normal form left the published basis");
    out[it - b.begin()] = c;
  }
  return out;
}

NumClass IntersectionRing::from_coordinates(int k, const QVector& coords) const {
  const auto& b = basis(k);
  if (coords.size() != b.size()) {
    throw DimensionMismatch("expected " + std::to_string(b.size()) + " coordinates in degree " +
                            std::to_string(k) + ", got " + std::to_string(coords.size()));
  }
  NumClass out;
  out.degree = k;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (coords[i] != 0) out.terms.emplace(b[i], coords[i]);
  return out;
}

QMatrix IntersectionRing::pairing_matrix(int k) const {
  const auto& rows = basis(k);
  const auto& cols = basis(dim_ - k);
  QMatrix m(rows.size(), QVector(cols.size(), 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m[i][j] = degree(normal_form(monomial(mul_exponents(rows[i], cols[j])), dim_));
  return m;
}

std::string IntersectionRing::monomial_label(const Exponents& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[i].name;
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string IntersectionRing::to_string(const NumClass& cls) const {
  if (cls.terms.empty()) return "0";
  std::string out;
  for (auto it = cls.terms.rbegin(); it != cls.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool is_one = mag == 1;
    const std::string label = monomial_label(e);
    if (label == "1") {
      out += conecalc::to_string(mag);
    } else {
      if (!is_one) out += conecalc::to_string(mag) + '*';
      out += label;
    }
  }
  return out;
}

// Recursive-descent parser over generator names.
namespace {

class ExprParser {
 public:
  ExprParser(const IntersectionRing& ring, std::string_view src) : ring_(ring), src_(src) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  const IntersectionRing& ring_;
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse expression '" + std::string(src_) + "' at offset " + std::to_string(pos_) +
                       ": " + what);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial one() const { return monomial(Exponents(ring_.generators().size(), 0)); }

  Polynomial expression() {
    Polynomial acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = scale(acc, -1);
    while (true) {
      if (accept('+')) acc = add(acc, term());
      else if (accept('-')) acc = add(acc, scale(term(), -1));
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = multiply(acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = power(base, std::stoi(std::string(src_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      // "3/2" is a rational literal only when digits follow the slash.
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
      return scale(one(), parse_rational(src_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return ring_.generator(src_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Polynomial IntersectionRing::parse(std::string_view expr) const { return ExprParser(*this, expr).parse(); }

// ---------------------------------------------------------------------------
// Presets and builders

SurfacePreset SurfacePreset::rho1(int rank, const Rational& l2, const Rational& c1, const Rational& c2) {
  SurfacePreset p{SurfaceKind::Rho1, rank, l2, {c1}, c2};
  validate_preset(p);
  return p;
}

SurfacePreset SurfacePreset::ruled(int rank, const Rational& mu, const QVector& c1, const Rational& c2) {
  SurfacePreset p{SurfaceKind::Ruled, rank, mu, c1, c2};
  validate_preset(p);
  return p;
}

std::vector<std::string> SurfacePreset::base_labels() const {
  if (kind == SurfaceKind::Rho1) return {"L"};
  return {"eta", "f"};
}

QMatrix SurfacePreset::base_pairing() const {
  if (kind == SurfaceKind::Rho1) return {{base_param}};
  return {{2 * base_param, Rational(1)}, {Rational(1), Rational(0)}};
}

void validate_preset(const SpacePreset& preset) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CurveBundlePreset>) {
          if (p.rank < 2) throw InvalidPreset("projective bundle rank must be >= 2");
        } else if constexpr (std::is_same_v<T, FibreProductPreset>) {
          if (p.m < 2 || p.n < 2) throw InvalidPreset("fibre product ranks must be >= 2");
        } else {
          if (p.rank < 2) throw InvalidPreset("surface bundle rank must be >= 2");
          if (p.kind == SurfaceKind::Rho1 && p.base_param <= 0) throw InvalidPreset("L^2 must be positive");
          if (p.c1.size() != p.base_labels().size()) {
            throw InvalidPreset("c1 needs " + std::to_string(p.base_labels().size()) + " coordinates");
          }
          const Rational end = c2_end(SurfaceBundleData{p.rank, p.c1, p.c2, true}, p.base_pairing());
          if (end != 0) {
            throw InvalidPreset("c2(End E) = 2r c2 - (r-1) c1^2 = " + conecalc::to_string(end) + " is not zero");
          }
        }
      },
      preset);
}

namespace {

Exponents unit(std::size_t n, std::size_t i, int e = 1) {
  Exponents out(n, 0);
  out[i] = e;
  return out;
}

IntersectionRing curve_fibre_ring(std::string name, const std::vector<std::string>& factor_names,
                                  const std::string& fibre_name, const std::vector<int>& ranks,
                                  const std::vector<long>& degrees) {
  const std::size_t k = ranks.size();
  if (k == 0 || degrees.size() != k) throw InvalidPreset("need one degree per factor");
  for (int r : ranks)
    if (r < 2) throw InvalidPreset("projective bundle rank must be >= 2");
  const std::size_t n = k + 1;
  const std::size_t fib = k;
  std::vector<Generator> gens;
  for (const auto& f : factor_names) gens.push_back({f, 1});
  gens.push_back({fibre_name, 1});

  std::vector<RewriteRule> rules;
  rules.push_back({unit(n, fib, 2), {}});
  for (std::size_t i = 0; i < k; ++i) {
    const int r = ranks[i];
    Exponents lhs = unit(n, i, r);
    Exponents rhs = unit(n, i, r - 1);
    rhs[fib] = 1;
    rules.push_back({lhs, monomial(rhs, Rational(Integer(degrees[i])))});
    Exponents lhs_f = lhs;
    lhs_f[fib] = 1;
    rules.push_back({lhs_f, {}});
    rules.push_back({unit(n, i, r + 1), {}});
  }
  Exponents top(n, 0);
  int dim = 1;
  for (std::size_t i = 0; i < k; ++i) {
    top[i] = ranks[i] - 1;
    dim += ranks[i] - 1;
  }
  top[fib] = 1;
  return IntersectionRing(std::move(name), std::move(gens), std::move(rules), std::move(top), dim);
}

}  // namespace

IntersectionRing build_curve_bundle_ring(int r, long d) {
  return curve_fibre_ring("P(E) over a curve", {"xi"}, "f", {r}, {d});
}

IntersectionRing build_fibre_product_ring(int m, int n, long d, long d2) {
  return curve_fibre_ring("P(E) x_C P(E')", {"xi", "zeta"}, "F", {m, n}, {d, d2});
}

IntersectionRing build_tower_ring(const std::vector<int>& ranks, const std::vector<long>& degrees) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ranks.size(); ++i) names.push_back("xi" + std::to_string(i + 1));
  return curve_fibre_ring("fibre product tower over a curve", names, "F", ranks, degrees);
}

namespace {

// Generators: head (degree 1), base classes A_i (degree 1), F (degree 2).
// Shared relations: A_i A_j = (A_i . A_j) F, A_i F = 0, F^2 = 0.
std::vector<RewriteRule> surface_base_rules(std::size_t n, std::size_t base_count, const QMatrix& pairing) {
  const std::size_t fib = n - 1;
  std::vector<RewriteRule> rules;
  for (std::size_t i = 0; i < base_count; ++i) {
    for (std::size_t j = i; j < base_count; ++j) {
      Exponents lhs(n, 0);
      lhs[1 + i] += 1;
      lhs[1 + j] += 1;
      rules.push_back({lhs, monomial(unit(n, fib), pairing[i][j])});
    }
    Exponents lhs(n, 0);
    lhs[1 + i] = 1;
    lhs[fib] = 1;
    rules.push_back({lhs, {}});
  }
  rules.push_back({unit(n, fib, 2), {}});
  return rules;
}

void check_base(const std::vector<std::string>& labels, const QMatrix& pairing, const QVector& c1) {
  if (pairing.size() != labels.size() || c1.size() != labels.size()) {
    throw DimensionMismatch("surface base data has inconsistent sizes");
  }
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    if (pairing[i].size() != labels.size()) throw DimensionMismatch("base pairing must be square");
    for (std::size_t j = 0; j < pairing.size(); ++j)
      if (pairing[i][j] != pairing[j][i]) throw InvalidPreset("base pairing must be symmetric");
  }
}

}  // namespace

IntersectionRing build_surface_xi_ring(int r, const std::vector<std::string>& base_labels,
                                       const QMatrix& base_pairing, const QVector& c1, const Rational& c2) {
  if (r < 2) throw InvalidPreset("surface bundle rank must be >= 2");
  check_base(base_labels, base_pairing, c1);
  const std::size_t b = base_labels.size();
  const std::size_t n = b + 2;
  const std::size_t fib = n - 1;
  std::vector<Generator> gens{{"xi", 1}};
  for (const auto& l : base_labels) gens.push_back({l, 1});
  gens.push_back({"F", 2});

  auto rules = surface_base_rules(n, b, base_pairing);
  Polynomial grothendieck;
  for (std::size_t i = 0; i < b; ++i) {
    Exponents e = unit(n, 0, r - 1);
    e[1 + i] = 1;
    grothendieck = add(grothendieck, monomial(e, c1[i]));
  }
  Exponents e = unit(n, 0, r - 2);
  e[fib] = 1;
  grothendieck = add(grothendieck, monomial(e, -c2));
  rules.insert(rules.begin(), RewriteRule{unit(n, 0, r), grothendieck});

  Exponents top = unit(n, 0, r - 1);
  top[fib] = 1;
  return IntersectionRing("P(E) over a surface (xi-basis)", std::move(gens), std::move(rules), std::move(top), r + 1);
}

IntersectionRing build_surface_xi_ring(const SurfacePreset& preset) {
  return build_surface_xi_ring(preset.rank, preset.base_labels(), preset.base_pairing(), preset.c1, preset.c2);
}

IntersectionRing build_lambda_ring_surface(const SurfacePreset& preset) {
  validate_preset(preset);
  const auto labels = preset.base_labels();
  const auto pairing = preset.base_pairing();
  const int r = preset.rank;
  const std::size_t b = labels.size();
  const std::size_t n = b + 2;
  std::vector<Generator> gens{{"lambda", 1}};
  for (const auto& l : labels) gens.push_back({l, 1});
  gens.push_back({"F", 2});

  auto rules = surface_base_rules(n, b, pairing);
  rules.insert(rules.begin(), RewriteRule{unit(n, 0, r), {}});
  Exponents top = unit(n, 0, r - 1);
  top[n - 1] = 1;
  return IntersectionRing("P(E) over a surface (lambda-basis)", std::move(gens), std::move(rules), std::move(top),
                          r + 1);
}

bool verify_lambda_vanishing(int r, const Rational& c1_sq, const Rational& c2) {
  if (r < 2) throw InvalidInput("rank must be >= 2");
  const IntersectionRing ring = build_surface_xi_ring(r, {"H"}, {{c1_sq}}, {Rational(1)}, c2);
  const Polynomial lambda = add(ring.generator("xi"), scale(ring.generator("H"), make_rational(-1, r)));
  return ring.normal_form(power(lambda, r), r).is_zero();
}

std::vector<Polynomial> lambda_to_xi_images(const SurfacePreset& preset, const IntersectionRing& xi_ring) {
  const auto labels = preset.base_labels();
  Polynomial lambda = xi_ring.generator("xi");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    lambda = add(lambda, scale(xi_ring.generator(labels[i]), -preset.c1[i] / preset.rank));
  }
  std::vector<Polynomial> images{lambda};
  for (const auto& l : labels) images.push_back(xi_ring.generator(l));
  images.push_back(xi_ring.generator("F"));
  return images;
}

}  // namespace conecalc
