#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace extlevel {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Modular, Poly };

inline constexpr std::size_t kMaxPolyVars = 8;

// Exponent vector of a monomial; unused trailing slots stay zero.
using Monomial = std::array<std::uint16_t, kMaxPolyVars>;

struct Term {
  Monomial exp{};
  mpz_class coef;
};

class RingElement;

namespace detail {
struct RingData;
}

/// Handle to an interned commutative ring with 1. Copies are cheap and two
/// handles compare equal iff they denote the same ring.
class Ring {
 public:
  static Ring integers();
  /// Z/q, q >= 2. Residues are kept in int64, so q must stay below 2^31.
  static Ring modular(std::uint64_t q);
  /// Z[vars...] with graded-lex order on the declared variable order.
  static Ring poly(std::vector<std::string> vars);

  RingKind kind() const;
  std::uint64_t modulus() const;
  const std::vector<std::string>& vars() const;
  std::size_t arity() const { return vars().size(); }
  bool two_invertible() const;
  bool is_finite() const { return kind() == RingKind::Modular; }
  std::string name() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(long value) const;
  RingElement from_mpz(const mpz_class& value) const;
  RingElement variable(std::size_t index) const;
  RingElement variable(std::string_view name) const;
  /// Builds a polynomial from arbitrary terms; normalises order and drops zeros.
  RingElement from_terms(std::vector<Term> terms) const;

  bool operator==(const Ring& other) const { return d_ == other.d_; }

 private:
  explicit Ring(const detail::RingData* d) : d_(d) {}
  const detail::RingData* d_;
  friend class RingElement;
};

/// Exact element of a Ring in canonical form: integers as mpz, residues in
/// [0, q), polynomials as graded-lex descending term lists with nonzero
/// coefficients. Canonical form makes payload equality ring equality.
class RingElement {
 public:
  using Payload = std::variant<mpz_class, std::int64_t, std::vector<Term>>;

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  const mpz_class& integer() const { return std::get<mpz_class>(v_); }
  std::int64_t residue() const { return std::get<std::int64_t>(v_); }
  const std::vector<Term>& terms() const { return std::get<std::vector<Term>>(v_); }

  /// Value as an integer when the element is a constant (any ring kind).
  std::optional<mpz_class> as_constant() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& b);
  RingElement& operator-=(const RingElement& b);
  RingElement& operator*=(const RingElement& b);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);

  RingElement scaled(long k) const;
  RingElement pow(unsigned e) const;

  /// Adds a*b into this element (one fused step for dense kernels).
  void add_product(const RingElement& a, const RingElement& b);

  bool operator==(const RingElement& b) const;

  std::string to_string() const;

 private:
  RingElement(Ring r, Payload v) : ring_(r), v_(std::move(v)) {}
  void check_same(const RingElement& b, const char* op) const;

  Ring ring_;
  Payload v_;
  friend class Ring;
  friend RingElement normalize(const RingElement& x);
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

enum class ArithOp { Add, Sub, Mul, Neg };

/// Exact arithmetic dispatch. Neg ignores b. Throws RingError on ring mismatch.
RingElement elem_arith(ArithOp op, const RingElement& a, const RingElement& b);

/// Returns the inverse when a is a unit. Poly units are the constants ±1.
std::optional<RingElement> is_unit(const RingElement& a);

/// Re-canonicalises an element; idempotent.
RingElement normalize(const RingElement& x);

/// Parses "3", "-xi", "2*xi*zeta^2 - zeta1 + 1" in the given ring.
RingElement parse_element(const Ring& ring, std::string_view text);

/// Identifiers appearing in an element expression, in first-seen order.
std::vector<std::string> expression_symbols(std::string_view text);

/// Ideal of a finite ring Z/q. Every ideal of Z/q is principal, so it is
/// stored as the divisor d | q of its canonical generator; d == q is the
/// zero ideal and d == 1 the whole ring.
class FiniteIdeal {
 public:
  FiniteIdeal(Ring ring, std::uint64_t divisor, std::vector<RingElement> witnesses = {});

  const Ring& ring() const { return ring_; }
  std::uint64_t divisor() const { return d_; }
  const std::vector<RingElement>& witnesses() const { return witnesses_; }

  bool is_zero() const { return d_ == ring_.modulus(); }
  bool is_whole() const { return d_ == 1; }
  bool contains(const RingElement& x) const;
  bool contains(std::int64_t residue) const;
  bool subset_of(const FiniteIdeal& other) const;
  std::size_t size() const { return ring_.modulus() / d_; }
  std::vector<std::int64_t> elements() const;

  FiniteIdeal sum(const FiniteIdeal& other) const;
  FiniteIdeal product(const FiniteIdeal& other) const;
  FiniteIdeal intersection(const FiniteIdeal& other) const;
  FiniteIdeal scaled(std::uint64_t k) const;

  bool operator==(const FiniteIdeal& other) const {
    return ring_ == other.ring_ && d_ == other.d_;
  }

  std::string to_string() const;

 private:
  Ring ring_;
  std::uint64_t d_;
  std::vector<RingElement> witnesses_;
};

/// Smallest ideal of Z/q containing gens, i.e. (gcd(gens, q)).
FiniteIdeal ideal_closure(const Ring& ring, const std::vector<RingElement>& gens);

}  // namespace extlevel
