#include "extlevel/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace extlevel {

namespace detail {

struct RingData {
  RingKind kind;
  std::uint64_t q = 0;
  std::vector<std::string> vars;
  bool two_invertible = false;
};

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<RingData>>& registry() {
  static std::map<std::string, std::unique_ptr<RingData>> r;
  return r;
}

const RingData* intern(const std::string& key, RingData proto) {
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) slot = std::make_unique<RingData>(std::move(proto));
  return slot.get();
}

}  // namespace
}  // namespace detail

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lex, descending: higher total degree first, then lex on the
// declared variable order.
bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.exp, y.exp); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms = std::move(out);
}

std::vector<Term> poly_add(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].exp, a[i].exp)) {
      Term t = b[j++];
      if (sign < 0) t.coef = -t.coef;
      out.push_back(std::move(t));
    } else {
      mpz_class c = sign < 0 ? mpz_class(a[i].coef - b[j].coef) : mpz_class(a[i].coef + b[j].coef);
      if (c != 0) out.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> poly_mul(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      Term t;
      for (std::size_t k = 0; k < kMaxPolyVars; ++k) {
        unsigned e = unsigned(x.exp[k]) + unsigned(y.exp[k]);
        if (e > 0xffff) throw RingError("polynomial exponent overflow");
        t.exp[k] = static_cast<std::uint16_t>(e);
      }
      t.coef = x.coef * y.coef;
      out.push_back(std::move(t));
    }
  }
  canonicalize(out);
  return out;
}

std::int64_t mod_reduce(const mpz_class& v, std::uint64_t q) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), q);
  return static_cast<std::int64_t>(r.get_ui());
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

// ---------------------------------------------------------------------------
// Ring

Ring Ring::integers() {
  static const detail::RingData* d =
      detail::intern("int", detail::RingData{RingKind::Integers, 0, {}, false});
  return Ring(d);
}

Ring Ring::modular(std::uint64_t q) {
  if (q < 2) throw RingError("modular ring needs q >= 2");
  if (q >= (std::uint64_t(1) << 31)) throw RingError("modulus too large (must be < 2^31)");
  return Ring(detail::intern("mod:" + std::to_string(q),
                             detail::RingData{RingKind::Modular, q, {}, q % 2 == 1}));
}

Ring Ring::poly(std::vector<std::string> vars) {
  if (vars.empty()) throw RingError("polynomial ring needs at least one variable");
  if (vars.size() > kMaxPolyVars)
    throw RingError("polynomial ring supports at most " + std::to_string(kMaxPolyVars) +
                    " variables");
  std::set<std::string> seen;
  std::string key = "poly:";
  for (const auto& v : vars) {
    if (v.empty()) throw RingError("empty variable name");
    if (!seen.insert(v).second) throw RingError("duplicate variable name: " + v);
    key += v + ",";
  }
  return Ring(detail::intern(key, detail::RingData{RingKind::Poly, 0, std::move(vars), false}));
}

RingKind Ring::kind() const { return d_->kind; }
std::uint64_t Ring::modulus() const { return d_->q; }
const std::vector<std::string>& Ring::vars() const { return d_->vars; }
bool Ring::two_invertible() const { return d_->two_invertible; }

std::string Ring::name() const {
  switch (kind()) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Modular:
      return "Z/" + std::to_string(modulus());
    case RingKind::Poly: {
      std::string s = "Z[";
      for (std::size_t i = 0; i < vars().size(); ++i) s += (i ? "," : "") + vars()[i];
      return s + "]";
    }
  }
  return "?";
}

RingElement Ring::zero() const { return from_int(0); }
RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(long value) const { return from_mpz(mpz_class(value)); }

RingElement Ring::from_mpz(const mpz_class& value) const {
  switch (kind()) {
    case RingKind::Integers:
      return RingElement(*this, value);
    case RingKind::Modular:
      return RingElement(*this, mod_reduce(value, modulus()));
    case RingKind::Poly: {
      std::vector<Term> t;
      if (value != 0) t.push_back(Term{Monomial{}, value});
      return RingElement(*this, std::move(t));
    }
  }
  throw RingError("unknown ring kind");
}

RingElement Ring::variable(std::size_t index) const {
  if (kind() != RingKind::Poly || index >= arity())
    throw RingError("variable index out of range in " + name());
  Term t{Monomial{}, mpz_class(1)};
  t.exp[index] = 1;
  return RingElement(*this, std::vector<Term>{std::move(t)});
}

RingElement Ring::variable(std::string_view name) const {
  if (kind() == RingKind::Poly) {
    for (std::size_t i = 0; i < arity(); ++i)
      if (vars()[i] == name) return variable(i);
  }
  throw RingError("unknown variable '" + std::string(name) + "' in " + this->name());
}

RingElement Ring::from_terms(std::vector<Term> terms) const {
  if (kind() != RingKind::Poly) throw RingError("from_terms needs a polynomial ring");
  for (const auto& t : terms)
    for (std::size_t k = arity(); k < kMaxPolyVars; ++k)
      if (t.exp[k] != 0) throw RingError("exponent vector exceeds ring arity");
  canonicalize(terms);
  return RingElement(*this, std::move(terms));
}

// ---------------------------------------------------------------------------
// RingElement

bool RingElement::is_zero() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == 0;
    case 1:
      return std::get<1>(v_) == 0;
    default:
      return std::get<2>(v_).empty();
  }
}

bool RingElement::is_one() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == 1;
    case 1:
      return std::get<1>(v_) == 1;
    default: {
      const auto& t = std::get<2>(v_);
      return t.size() == 1 && t[0].exp == Monomial{} && t[0].coef == 1;
    }
  }
}

std::optional<mpz_class> RingElement::as_constant() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_);
    case 1:
      return mpz_class(static_cast<long>(std::get<1>(v_)));
    default: {
      const auto& t = std::get<2>(v_);
      if (t.empty()) return mpz_class(0);
      if (t.size() == 1 && t[0].exp == Monomial{}) return t[0].coef;
      return std::nullopt;
    }
  }
}

void RingElement::check_same(const RingElement& b, const char* op) const {
  if (!(ring_ == b.ring_))
    throw RingError(std::string("ring mismatch in ") + op + ": " + ring_.name() + " vs " +
                    b.ring_.name());
}

RingElement RingElement::operator-() const {
  switch (v_.index()) {
    case 0:
      return RingElement(ring_, mpz_class(-std::get<0>(v_)));
    case 1: {
      auto r = std::get<1>(v_);
      return RingElement(ring_, r == 0 ? r : std::int64_t(ring_.modulus()) - r);
    }
    default: {
      auto t = std::get<2>(v_);
      for (auto& x : t) x.coef = -x.coef;
      return RingElement(ring_, std::move(t));
    }
  }
}

RingElement& RingElement::operator+=(const RingElement& b) {
  check_same(b, "add");
  switch (v_.index()) {
    case 0:
      std::get<0>(v_) += std::get<0>(b.v_);
      break;
    case 1: {
      auto s = std::get<1>(v_) + std::get<1>(b.v_);
      auto q = std::int64_t(ring_.modulus());
      std::get<1>(v_) = s >= q ? s - q : s;
      break;
    }
    default:
      if (std::get<2>(b.v_).empty()) break;
      if (std::get<2>(v_).empty()) {
        std::get<2>(v_) = std::get<2>(b.v_);
        break;
      }
      std::get<2>(v_) = poly_add(std::get<2>(v_), std::get<2>(b.v_), +1);
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& b) {
  check_same(b, "sub");
  switch (v_.index()) {
    case 0:
      std::get<0>(v_) -= std::get<0>(b.v_);
      break;
    case 1: {
      auto s = std::get<1>(v_) - std::get<1>(b.v_);
      std::get<1>(v_) = s < 0 ? s + std::int64_t(ring_.modulus()) : s;
      break;
    }
    default:
      if (std::get<2>(b.v_).empty()) break;
      std::get<2>(v_) = poly_add(std::get<2>(v_), std::get<2>(b.v_), -1);
  }
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same(b, "mul");
  switch (a.v_.index()) {
    case 0:
      return RingElement(a.ring_, mpz_class(std::get<0>(a.v_) * std::get<0>(b.v_)));
    case 1:
      return RingElement(a.ring_, (std::get<1>(a.v_) * std::get<1>(b.v_)) %
                                      std::int64_t(a.ring_.modulus()));
    default:
      return RingElement(a.ring_, poly_mul(std::get<2>(a.v_), std::get<2>(b.v_)));
  }
}

RingElement& RingElement::operator*=(const RingElement& b) {
  *this = *this * b;
  return *this;
}

void RingElement::add_product(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero()) {
    check_same(a, "add_product");
    check_same(b, "add_product");
    return;
  }
  if (v_.index() == 1) {
    check_same(a, "add_product");
    check_same(b, "add_product");
    auto q = std::int64_t(ring_.modulus());
    std::get<1>(v_) = (std::get<1>(v_) + std::get<1>(a.v_) * std::get<1>(b.v_)) % q;
    return;
  }
  *this += a * b;
}

RingElement RingElement::scaled(long k) const { return *this * ring_.from_int(k); }

RingElement RingElement::pow(unsigned e) const {
  RingElement result = ring_.one();
  RingElement base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool RingElement::operator==(const RingElement& b) const {
  if (!(ring_ == b.ring_)) return false;
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == std::get<0>(b.v_);
    case 1:
      return std::get<1>(v_) == std::get<1>(b.v_);
    default: {
      const auto& x = std::get<2>(v_);
      const auto& y = std::get<2>(b.v_);
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].exp != y[i].exp || x[i].coef != y[i].coef) return false;
      return true;
    }
  }
}

std::string RingElement::to_string() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_).get_str();
    case 1:
      return std::to_string(std::get<1>(v_));
    default: {
      const auto& t = std::get<2>(v_);
      if (t.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < t.size(); ++i) {
        mpz_class c = t[i].coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0)
          s += neg ? "-" : "";
        else
          s += neg ? " - " : " + ";
        bool constant = t[i].exp == Monomial{};
        bool first = true;
        if (c != 1 || constant) {
          s += c.get_str();
          first = false;
        }
        for (std::size_t k = 0; k < ring_.arity(); ++k) {
          if (t[i].exp[k] == 0) continue;
          if (!first) s += "*";
          s += ring_.vars()[k];
          if (t[i].exp[k] > 1) s += "^" + std::to_string(t[i].exp[k]);
          first = false;
        }
      }
      return s;
    }
  }
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement elem_arith(ArithOp op, const RingElement& a, const RingElement& b) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Neg:
      return -a;
  }
  throw RingError("unknown arithmetic op");
}

std::optional<RingElement> is_unit(const RingElement& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::Integers:
      if (a.integer() == 1 || a.integer() == -1) return a;
      return std::nullopt;
    case RingKind::Modular: {
      mpz_class inv, x(static_cast<unsigned long>(a.residue())), q(static_cast<unsigned long>(r.modulus()));
      if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t()) == 0) return std::nullopt;
      return r.from_mpz(inv);
    }
    case RingKind::Poly: {
      auto c = a.as_constant();
      if (c && (*c == 1 || *c == -1)) return a;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

RingElement normalize(const RingElement& x) {
  switch (x.ring().kind()) {
    case RingKind::Integers:
      return x;
    case RingKind::Modular:
      return x.ring().from_int(static_cast<long>(x.residue()));
    case RingKind::Poly:
      return x.ring().from_terms(x.terms());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Expression parsing: sum of signed products of integers, identifiers and
// identifier^k.

namespace {

struct Parser {
  const Ring& ring;
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw RingError("cannot parse element '" + std::string(s) + "': " + what);
  }
  unsigned long number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected number");
    return std::stoul(std::string(s.substr(start, pos - start)));
  }
  RingElement factor() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      RingElement e = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
      ++pos;
      return power(e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return power(ring.from_mpz(mpz_class(std::string(s.substr(start, pos - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return power(ring.variable(s.substr(start, pos - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  RingElement power(RingElement base) {
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      return base.pow(static_cast<unsigned>(number()));
    }
    return base;
  }
  RingElement product() {
    RingElement p = factor();
    for (;;) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        p *= factor();
      } else {
        return p;
      }
    }
  }
  RingElement expr() {
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    RingElement acc = product();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        bool minus = s[pos] == '-';
        ++pos;
        RingElement t = product();
        if (minus)
          acc -= t;
        else
          acc += t;
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

RingElement parse_element(const Ring& ring, std::string_view text) {
  Parser p{ring, text};
  RingElement e = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return e;
}

std::vector<std::string> expression_symbols(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string sym(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), sym) == out.end()) out.push_back(sym);
    } else {
      ++i;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FiniteIdeal

FiniteIdeal::FiniteIdeal(Ring ring, std::uint64_t divisor, std::vector<RingElement> witnesses)
    : ring_(ring), d_(divisor), witnesses_(std::move(witnesses)) {
  if (ring_.kind() != RingKind::Modular) throw RingError("finite ideals live in Z/q only");
  if (d_ == 0 || ring_.modulus() % d_ != 0)
    throw RingError("ideal divisor must divide the modulus");
}

bool FiniteIdeal::contains(std::int64_t residue) const {
  auto q = std::int64_t(ring_.modulus());
  return (((residue % q) + q) % q) % std::int64_t(d_) == 0;
}

bool FiniteIdeal::contains(const RingElement& x) const {
  if (!(x.ring() == ring_)) throw RingError("ring mismatch in ideal membership");
  return contains(x.residue());
}

bool FiniteIdeal::subset_of(const FiniteIdeal& other) const {
  return ring_ == other.ring_ && d_ % other.d_ == 0;
}

std::vector<std::int64_t> FiniteIdeal::elements() const {
  std::vector<std::int64_t> out;
  for (std::uint64_t v = 0; v < ring_.modulus(); v += d_) out.push_back(std::int64_t(v));
  return out;
}

FiniteIdeal FiniteIdeal::sum(const FiniteIdeal& other) const {
  return FiniteIdeal(ring_, gcd_u(d_, other.d_));
}

FiniteIdeal FiniteIdeal::product(const FiniteIdeal& other) const {
  // (a)(b) = (ab) and gcd(ab, q) is the canonical generator.
  mpz_class p = mpz_class(static_cast<unsigned long>(d_)) * static_cast<unsigned long>(other.d_);
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), p.get_mpz_t(), ring_.modulus());
  return FiniteIdeal(ring_, g.get_ui());
}

FiniteIdeal FiniteIdeal::intersection(const FiniteIdeal& other) const {
  return FiniteIdeal(ring_, std::lcm(d_, other.d_));
}

FiniteIdeal FiniteIdeal::scaled(std::uint64_t k) const {
  mpz_class p = mpz_class(static_cast<unsigned long>(d_)) * static_cast<unsigned long>(k);
  mpz_class g;
  mpz_gcd_ui(g.get_mpz_t(), p.get_mpz_t(), ring_.modulus());
  return FiniteIdeal(ring_, g.get_ui());
}

std::string FiniteIdeal::to_string() const {
  if (is_zero()) return "(0)";
  return "(" + std::to_string(d_) + ")";
}

FiniteIdeal ideal_closure(const Ring& ring, const std::vector<RingElement>& gens) {
  if (ring.kind() != RingKind::Modular) throw RingError("ideal_closure needs a finite ring Z/q");
  std::uint64_t d = ring.modulus();
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw RingError("ring mismatch in ideal_closure");
    d = gcd_u(d, std::uint64_t(g.residue()));
  }
  return FiniteIdeal(ring, d, gens);
}

}  // namespace extlevel
