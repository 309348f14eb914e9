#include <doctest.h>

#include <numeric>
#include <set>

#include "extlevel/ring.hpp"
#include "generators.hpp"

using namespace extlevel;

namespace {

mpz_class eval(const RingElement& x, const std::vector<long>& pt) {
  mpz_class acc = 0;
  for (auto& t : x.terms()) {
    mpz_class m = t.coef;
    for (std::size_t v = 0; v < pt.size(); ++v)
      for (int e = 0; e < t.exp[v]; ++e) m *= pt[v];
    acc += m;
  }
  return acc;
}

}  // namespace

TEST_CASE("modular arithmetic agrees with plain residues") {
  gen::Rng rng(1);
  for (std::uint64_t q : {2u, 9u, 25u, 27u, 101u}) {
    auto R = Ring::modular(q);
    for (int it = 0; it < 300; ++it) {
      long a = gen::uniform(rng, -500, 500), b = gen::uniform(rng, -500, 500);
      auto md = [&](long v) { return ((v % long(q)) + long(q)) % long(q); };
      CHECK((R.from_int(a) + R.from_int(b)).residue() == md(a + b));
      CHECK((R.from_int(a) - R.from_int(b)).residue() == md(a - b));
      CHECK((R.from_int(a) * R.from_int(b)).residue() == md(md(a) * md(b)));
      CHECK((-R.from_int(a)).residue() == md(-a));
    }
  }
}

TEST_CASE("units of Z/q are exactly residues coprime to q") {
  auto R = Ring::modular(9);
  for (long a = 0; a < 9; ++a) {
    auto inv = is_unit(R.from_int(a));
    CHECK(inv.has_value() == (std::gcd(a, 9L) == 1));
    if (inv) CHECK((*inv * R.from_int(a)).is_one());
  }
  auto P = Ring::poly({"x"});
  CHECK(is_unit(P.from_int(-1)).has_value());
  CHECK_FALSE(is_unit(P.variable(0)).has_value());
  CHECK_FALSE(is_unit(Ring::integers().from_int(2)).has_value());
}

TEST_CASE("polynomial arithmetic is a homomorphism under evaluation") {
  gen::Rng rng(2);
  auto P = Ring::poly({"xi", "zeta", "zeta1"});
  for (int it = 0; it < 200; ++it) {
    auto a = gen::poly(P, rng), b = gen::poly(P, rng);
    std::vector<long> pt{gen::uniform(rng, -4, 4), gen::uniform(rng, -4, 4), gen::uniform(rng, -4, 4)};
    CHECK(eval(a + b, pt) == eval(a, pt) + eval(b, pt));
    CHECK(eval(a - b, pt) == eval(a, pt) - eval(b, pt));
    CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
    CHECK(eval(a.pow(3), pt) == eval(a, pt) * eval(a, pt) * eval(a, pt));
    auto c = a;
    c.add_product(a, b);
    CHECK(c == a + a * b);
    CHECK(normalize(a) == a);
  }
}

TEST_CASE("canonical form makes equal polynomials compare equal") {
  auto P = Ring::poly({"xi", "zeta"});
  auto xi = P.variable("xi"), z = P.variable("zeta");
  CHECK((xi + z) * (xi - z) == xi * xi - z * z);
  CHECK(((xi + z) - z - xi).is_zero());
  CHECK((xi * z).to_string() == "xi*zeta");
  CHECK((-(xi * z.pow(2))).to_string() == "-xi*zeta^2");
}

TEST_CASE("parse_element") {
  auto P = Ring::poly({"xi", "zeta", "zeta1"});
  auto xi = P.variable(0), z = P.variable(1), z1 = P.variable(2);
  CHECK(parse_element(P, "2*xi*zeta^2 - zeta1 + 1") == xi * z * z * P.from_int(2) - z1 + P.one());
  CHECK(parse_element(P, "-(xi+zeta)^2") == -((xi + z) * (xi + z)));
  CHECK(parse_element(Ring::modular(9), "3*4") == Ring::modular(9).from_int(3));
  CHECK_THROWS_AS(parse_element(P, "eta"), RingError);
  CHECK_THROWS_AS(parse_element(P, "xi +"), RingError);
  CHECK(expression_symbols("xi*zeta - xi^2 + zeta1") == std::vector<std::string>{"xi", "zeta", "zeta1"});
}

TEST_CASE("mixing rings is an error") {
  auto a = Ring::modular(9).one(), b = Ring::modular(5).one();
  CHECK_THROWS_AS(a + b, RingError);
  CHECK_THROWS_AS(elem_arith(ArithOp::Mul, a, b), RingError);
  CHECK(Ring::modular(9) == Ring::modular(9));
  CHECK_THROWS_AS(Ring::modular(1), RingError);
}

TEST_CASE("ideal closure matches brute-force spans") {
  for (std::uint64_t q : {9u, 25u, 27u, 45u}) {
    auto R = Ring::modular(q);
    gen::Rng rng(q);
    for (int it = 0; it < 40; ++it) {
      std::vector<RingElement> gens{gen::residue(R, rng), gen::residue(R, rng)};
      std::set<std::int64_t> span;
      for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) span.insert((a * gens[0].residue() + b * gens[1].residue()) % q);
      auto A = ideal_closure(R, gens);
      auto el = A.elements();
      CHECK(std::set<std::int64_t>(el.begin(), el.end()) == span);
      CHECK(A.size() == span.size());
    }
  }
  auto Z25 = Ring::modular(25);
  CHECK(ideal_closure(Z25, {Z25.from_int(10), Z25.from_int(15)}).divisor() == 5);
}

TEST_CASE("ideal lattice operations") {
  auto R = Ring::modular(9);
  FiniteIdeal whole(R, 1), three(R, 3), zero(R, 9);
  CHECK(whole.is_whole());
  CHECK(zero.is_zero());
  CHECK(three.to_string() == "(3)");
  CHECK(zero.to_string() == "(0)");
  CHECK(three.product(three) == zero);
  CHECK(three.sum(zero) == three);
  CHECK(three.intersection(whole) == three);
  CHECK(three.subset_of(whole));
  CHECK_FALSE(whole.subset_of(three));
  CHECK(three.contains(R.from_int(6)));
  CHECK_FALSE(three.contains(R.from_int(4)));
  CHECK(three.elements() == std::vector<std::int64_t>{0, 3, 6});
  CHECK(whole.scaled(3) == three);
  CHECK_THROWS(FiniteIdeal(R, 4));
}
