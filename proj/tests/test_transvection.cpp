#include <doctest.h>

#include "extlevel/transvection.hpp"
#include "generators.hpp"

using namespace extlevel;

namespace {

struct Sym {
  Ring R = Ring::poly({"xi", "zeta"});
  RingElement xi = R.variable(0);
  RingElement zeta = R.variable(1);
};

// [t_{I,J}(xi), W t_{a,b}(zeta)] computed from matrices alone.
ExactMatrix oracle(const WedgeSpec& s, const Sym& y, std::size_t I, std::size_t J, int a, int b) {
  const std::size_t N = s.N(), n = std::size_t(s.n());
  auto t = ExactMatrix::identity(y.R, N), ti = t;
  t.at(I, J) = y.xi;
  ti.at(I, J) = -y.xi;
  auto w = wedge_matrix(s, ExactMatrix::transvection(n, a, b, y.zeta));
  auto wi = wedge_matrix(s, ExactMatrix::transvection(n, a, b, -y.zeta));
  return mat_mul(mat_mul(t, w), mat_mul(ti, wi));
}

TransvectionTerm term(const WedgeSpec& s, const char* I, const char* J, const RingElement& x) {
  return {s.parse_index(I), s.parse_index(J), x};
}

}  // namespace

TEST_CASE("classifier agrees with the matrix commutator") {
  Sym y;
  for (auto [n, m] : {std::pair{4, 2}, {5, 2}, {5, 3}}) {
    WedgeSpec s(n, m);
    int degenerate = 0, checked = 0;
    for (std::size_t I = 0; I < s.N(); ++I)
      for (std::size_t J = 0; J < s.N(); ++J) {
        if (I == J) continue;
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            auto cls = classify_commutator(s.index(I), s.index(J), a, b);
            if (cls.tag == CommutatorTag::Degenerate) {
              ++degenerate;
              continue;
            }
            auto lhs = oracle(s, y, I, J, a, b);
            auto rhs = realize(s, y.R, instantiate(cls, y.xi, y.zeta));
            CHECK_MESSAGE(lhs == rhs, s.index(I).label() << "," << s.index(J).label() << " with " << a << "," << b);
            if (cls.tag == CommutatorTag::Vanishes) CHECK(lhs.is_identity());
            ++checked;
          }
      }
    CHECK(checked > 0);
    CHECK(degenerate > 0);
  }
}

TEST_CASE("the three scenarios of the alpha_2 paths") {
  Sym y;
  WedgeSpec s(5, 2);
  auto w = WedgeTerm{2, 3, y.zeta};
  CHECK(commutator_eval(s, term(s, "14", "15", y.xi), w, true).empty());
  auto one = commutator_eval(s, term(s, "13", "35", y.xi), w, true);
  CHECK(one.to_string() == "t_{12,35}(-xi*zeta)");
  auto both = commutator_eval(s, term(s, "13", "24", y.xi), w, true);
  CHECK(both.to_string() == "t_{12,24}(-xi*zeta) t_{12,34}(xi*zeta^2) t_{13,34}(xi*zeta)");
}

TEST_CASE("a three-factor commutator at (4,2)") {
  Sym y;
  WedgeSpec s(4, 2);
  auto r = commutator_eval(s, term(s, "12", "34", y.xi), WedgeTerm{4, 2, y.zeta}, true);
  auto want = TransvectionProduct{term(s, "14", "23", -(y.xi * y.zeta * y.zeta))} *
              TransvectionProduct{term(s, "14", "34", -(y.xi * y.zeta))} *
              TransvectionProduct{term(s, "12", "23", -(y.xi * y.zeta))};
  CHECK(realize(s, y.R, r) == realize(s, y.R, want));
}

TEST_CASE("degenerate class") {
  Sym y;
  WedgeSpec s(4, 2);
  // I - i + j = J
  auto cls = classify_commutator(s.parse_index("13"), s.parse_index("12"), 2, 3);
  CHECK(cls.tag == CommutatorTag::Degenerate);
  CHECK_THROWS_AS(commutator_eval(s, term(s, "13", "12", y.xi), WedgeTerm{2, 3, y.zeta}), DegenerateCommutator);
  CHECK_THROWS_AS(instantiate(cls, y.xi, y.zeta), DegenerateCommutator);
}

TEST_CASE("words: inverse, flatten, conjugate") {
  Sym y;
  WedgeSpec s(5, 2);
  TransvectionProduct p{term(s, "12", "34", y.xi), WedgeTerm{1, 3, y.zeta}};
  auto e = ExactMatrix::identity(y.R, s.N());
  CHECK(realize(s, y.R, p * p.inverse()) == e);
  CHECK(p.flatten(s).size() == 1 + s.residue());
  auto c = conjugate(p, TransvectionProduct{term(s, "15", "23", y.xi)});
  CHECK(realize(s, y.R, c) == conj_left(realize(s, y.R, p), realize(s, term(s, "15", "23", y.xi))));
  auto comm = commutator(p, TransvectionProduct{WedgeTerm{2, 4, y.zeta}});
  CHECK(realize(s, y.R, comm) == group_commutator(realize(s, y.R, p),
                                                  wedge_matrix(s, ExactMatrix::transvection(5, 2, 4, y.zeta))));
  CHECK(TransvectionProduct{}.to_string() == "e");
}

TEST_CASE("z-generators") {
  Sym y;
  WedgeSpec s(4, 2);
  auto I = s.parse_index("12"), J = s.parse_index("34");
  auto z = realize(s, y.R, z_generator(I, J, y.xi, y.zeta));
  auto tJI = realize(s, TransvectionTerm{J, I, y.zeta});
  CHECK(z == conj_left(tJI, realize(s, TransvectionTerm{I, J, y.xi})));
  CHECK_THROWS(z_generator(I, I, y.xi, y.zeta));
}

TEST_CASE("[ab, cd] decomposition") {
  gen::Rng rng(13);
  auto R = Ring::modular(9);
  for (int it = 0; it < 20; ++it) {
    auto a = gen::invertible(R, 3, rng), b = gen::invertible(R, 3, rng);
    auto c = gen::invertible(R, 3, rng), d = gen::invertible(R, 3, rng);
    auto f = abcd_decompose(a, b, c, d);
    auto prod = mat_mul(mat_mul(f[0], f[1]), mat_mul(f[2], f[3]));
    CHECK(prod == group_commutator(mat_mul(a, b), mat_mul(c, d)));
  }
  Sym y;
  WedgeSpec s(4, 2);
  TransvectionProduct a{WedgeTerm{1, 2, y.xi}}, b{term(s, "12", "34", y.zeta)};
  TransvectionProduct c{WedgeTerm{3, 1, y.zeta}}, d{term(s, "13", "24", y.xi)};
  auto f = abcd_decompose(a, b, c, d);
  CHECK(realize(s, y.R, f[0] * f[1] * f[2] * f[3]) == realize(s, y.R, commutator(a * b, c * d)));
}
