#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "extlevel/wedge.hpp"
#include "generators.hpp"

using namespace extlevel;

namespace {

RingElement leibniz_minor(const ExactMatrix& g, const WeightIndex& I, const WeightIndex& J) {
  auto ri = I.elems(), cj = J.elems();
  std::vector<int> p(ri.size());
  std::iota(p.begin(), p.end(), 0);
  auto acc = g.ring().zero();
  do {
    auto term = g.ring().from_int(perm_sign(p));
    for (std::size_t a = 0; a < ri.size(); ++a) term *= g.at(ri[a] - 1, cj[p[a]] - 1);
    acc += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

std::vector<TransvectionTerm> terms(const WedgeSpec& s, const Ring& R,
                                    std::initializer_list<std::tuple<const char*, const char*, long>> ts) {
  std::vector<TransvectionTerm> out;
  auto xi = R.variable(0);
  for (auto& [I, J, c] : ts) out.push_back({s.parse_index(I), s.parse_index(J), xi.scaled(c)});
  return out;
}

}  // namespace

TEST_CASE("wedge_matrix entries are minors") {
  gen::Rng rng(9);
  auto P = Ring::poly({"x", "y"});
  for (auto [n, m] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 3}}) {
    WedgeSpec s(n, m);
    auto g = gen::matrix(P, std::size_t(n), rng);
    auto w = wedge_matrix(s, g);
    for (std::size_t r = 0; r < s.N(); ++r)
      for (std::size_t c = 0; c < s.N(); ++c) CHECK(w.at(r, c) == leibniz_minor(g, s.index(r), s.index(c)));
    CHECK(wedge_matrix_serial(s, g) == w);
  }
}

TEST_CASE("parallel and serial kernels agree") {
  gen::Rng rng(10);
  auto R = Ring::modular(27);
  for (auto [n, m] : {std::pair{7, 3}, {8, 4}, {9, 2}}) {
    WedgeSpec s(n, m);
    auto g = gen::matrix(R, std::size_t(n), rng);
    CHECK(wedge_matrix(s, g) == wedge_matrix_serial(s, g));
  }
}

TEST_CASE("spec shape") {
  WedgeSpec s(6, 3);
  CHECK(s.N() == 20);
  CHECK(s.stable());
  CHECK_FALSE(s.level_range());
  CHECK(s.residue() == 6);
  CHECK(s.rank(s.parse_index("456")) == 19);
  CHECK(WedgeSpec(6, 2).level_range());
  CHECK_THROWS(WedgeSpec(2, 1));
  CHECK_THROWS(WedgeSpec(5, 5));
  CHECK_THROWS(WedgeSpec(5, 0));
  CHECK_THROWS(s.parse_index("12"));
}

TEST_CASE("closed form for the image of t_{1,3}") {
  auto P = Ring::poly({"xi"});
  auto xi = P.variable(0);
  WedgeSpec s2(5, 2);
  auto f2 = wedge_transvection_formula(s2, 1, 3, xi);
  auto want2 = terms(s2, P, {{"12", "23", -1}, {"14", "34", 1}, {"15", "35", 1}});
  REQUIRE(f2.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(f2[k].I == want2[k].I);
    CHECK(f2[k].J == want2[k].J);
    CHECK(f2[k].arg == want2[k].arg);
  }
  WedgeSpec s3(5, 3);
  auto f3 = wedge_transvection_formula(s3, 1, 3, xi);
  auto want3 = terms(s3, P, {{"124", "234", -1}, {"125", "235", -1}, {"145", "345", 1}});
  REQUIRE(f3.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(f3[k].to_string() == want3[k].to_string());
  }
  CHECK(realize_terms(s3, P, f3) == wedge_matrix(s3, ExactMatrix::transvection(5, 1, 3, xi)));
}

TEST_CASE("closed form matches minors for both orders of i and j") {
  auto P = Ring::poly({"xi"});
  auto xi = P.variable(0);
  for (int n = 3; n <= 6; ++n)
    for (int m = 1; m < n && m <= 3; ++m) {
      WedgeSpec s(n, m);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          auto f = wedge_transvection_formula(s, i, j, xi);
          CHECK(f.size() == s.residue());
          CHECK(realize_terms(s, P, f) == wedge_matrix(s, ExactMatrix::transvection(std::size_t(n), i, j, xi)));
        }
    }
}

TEST_CASE("diagonal images") {
  auto P = Ring::poly({"xi"});
  auto xi = P.variable(0);
  WedgeSpec s(5, 4);
  auto d = wedge_diag(s, 2, xi);
  std::vector<RingElement> want{xi, xi, xi, P.one(), xi};
  for (std::size_t k = 0; k < 5; ++k) CHECK(d.at(k, k) == want[k]);
  CHECK(d.is_identity() == false);
  for (auto [n, m] : {std::pair{5, 2}, {6, 3}})
    for (int i = 1; i <= n; ++i) {
      WedgeSpec t(n, m);
      CHECK(wedge_diag(t, i, xi) == wedge_matrix(t, ExactMatrix::diagonal_unit(std::size_t(n), i, xi)));
    }
}

TEST_CASE("determinant relation") {
  gen::Rng rng(11);
  auto R = Ring::modular(9);
  for (auto [n, m] : {std::pair{4, 2}, {5, 2}, {5, 3}}) {
    WedgeSpec s(n, m);
    CHECK(det_exponent(s) == binomial(n - 1, m - 1));
    for (int it = 0; it < 10; ++it) {
      auto g = gen::invertible(R, std::size_t(n), rng);
      CHECK(determinant(wedge_matrix(s, g)) == determinant(g).pow(unsigned(det_exponent(s))));
      CHECK(det_check(s, g));
    }
  }
}

TEST_CASE("homomorphism on a few symbolic pairs") {
  gen::Rng rng(12);
  auto P = Ring::poly({"x", "y", "z"});
  WedgeSpec s(5, 2);
  for (int it = 0; it < 5; ++it) {
    auto g = gen::elementary(P, 5, 4, rng), h = gen::elementary(P, 5, 4, rng);
    CHECK(wedge_matrix(s, mat_mul(g, h)) == mat_mul(wedge_matrix(s, g), wedge_matrix(s, h)));
  }
}
