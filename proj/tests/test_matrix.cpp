#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "extlevel/matrix.hpp"
#include "generators.hpp"

using namespace extlevel;

namespace {

RingElement leibniz(const ExactMatrix& a) {
  std::vector<int> p(a.dim());
  std::iota(p.begin(), p.end(), 0);
  auto acc = a.ring().zero();
  do {
    auto term = a.ring().from_int(perm_sign(p));
    for (std::size_t r = 0; r < a.dim(); ++r) term *= a.at(r, std::size_t(p[r]));
    acc += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

ExactMatrix naive_mul(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(a.ring(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto s = a.ring().zero();
      for (std::size_t k = 0; k < a.dim(); ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

}  // namespace

TEST_CASE("products agree with the schoolbook formula") {
  gen::Rng rng(3);
  auto R = Ring::modular(9);
  auto P = Ring::poly({"x", "y"});
  for (std::size_t n : {1u, 3u, 5u, 17u, 20u}) {
    auto a = gen::matrix(R, n, rng), b = gen::matrix(R, n, rng);
    auto ref = naive_mul(a, b);
    CHECK(mat_mul(a, b) == ref);
    CHECK(mat_mul_serial(a, b) == ref);
  }
  auto a = gen::matrix(P, 4, rng), b = gen::matrix(P, 4, rng);
  CHECK(mat_mul(a, b) == naive_mul(a, b));
}

TEST_CASE("determinant and characteristic polynomial against Leibniz") {
  gen::Rng rng(4);
  for (auto R : {Ring::modular(9), Ring::integers(), Ring::poly({"x", "y"})}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto a = gen::matrix(R, n, rng);
      CHECK(determinant(a) == leibniz(a));
      // det(cI - A) = sum_k c_k c^{n-k}
      auto cp = char_poly(a);
      REQUIRE(cp.size() == n + 1);
      for (long c : {-2L, 0L, 3L}) {
        auto shifted = ExactMatrix::scalar(R.from_int(c), n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) shifted.at(r, s) -= a.at(r, s);
        auto val = R.zero();
        for (std::size_t k = 0; k <= n; ++k) val += cp[k] * R.from_int(c).pow(unsigned(n - k));
        CHECK(val == leibniz(shifted));
      }
    }
  }
}

TEST_CASE("inverse") {
  gen::Rng rng(5);
  auto R = Ring::modular(9);
  for (int it = 0; it < 30; ++it) {
    auto g = gen::invertible(R, 5, rng);
    auto e = ExactMatrix::identity(R, 5);
    CHECK(mat_mul(g, mat_inverse(g)) == e);
    CHECK(mat_mul(mat_inverse(g), g) == e);
  }
  auto P = Ring::poly({"x"});
  auto t = ExactMatrix::transvection(4, 1, 3, P.variable(0));
  CHECK(mat_inverse(t) == ExactMatrix::transvection(4, 1, 3, -P.variable(0)));
  auto singular = ExactMatrix::scalar(R.from_int(3), 3);
  CHECK_THROWS_AS(mat_inverse(singular), MatrixError);
}

TEST_CASE("minors are determinants of submatrices") {
  gen::Rng rng(6);
  auto R = Ring::poly({"x", "y"});
  auto g = gen::matrix(R, 5, rng);
  for (int m = 1; m <= 3; ++m)
    for (auto& I : enumerate_indices(5, m))
      for (auto& J : enumerate_indices(5, m)) {
        ExactMatrix sub(R, std::size_t(m));
        auto ri = I.elems(), cj = J.elems();
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) sub.at(a, b) = g.at(ri[a] - 1, cj[b] - 1);
        CHECK(minor(g, I, J) == leibniz(sub));
      }
}

TEST_CASE("elementary matrices and column operations") {
  auto R = Ring::modular(9);
  auto xi = R.from_int(4);
  auto t = ExactMatrix::transvection(4, 2, 3, xi);
  CHECK(t.at(1, 2) == xi);
  auto g = ExactMatrix::identity(R, 4);
  g.apply_col_op(1, 2, xi);
  CHECK(g == t);
  auto h = ExactMatrix::identity(R, 4);
  h.apply_row_op(1, 2, xi);
  CHECK(h == t);
  gen::Rng rng(7);
  auto a = gen::matrix(R, 4, rng), b = a;
  b.apply_col_op(0, 3, xi);
  CHECK(b == mat_mul(a, ExactMatrix::transvection(4, 1, 4, xi)));
  CHECK(ExactMatrix::diagonal_unit(4, 2, xi).at(1, 1) == xi);
  CHECK(ExactMatrix::scalar(xi, 3).is_scalar());
  CHECK_FALSE(t.is_scalar());
  CHECK_THROWS(ExactMatrix::transvection(4, 2, 2, xi));
}

TEST_CASE("Hall-Witt identity on random matrices") {
  gen::Rng rng(8);
  auto R = Ring::modular(9);
  for (int it = 0; it < 20; ++it) {
    auto x = gen::invertible(R, 3, rng), y = gen::invertible(R, 3, rng), z = gen::invertible(R, 3, rng);
    CHECK(hall_witt_check(x, y, z).ok);
  }
}

TEST_CASE("commutator and conjugation conventions") {
  auto P = Ring::poly({"a", "b"});
  auto x = ExactMatrix::transvection(3, 1, 2, P.variable(0));
  auto y = ExactMatrix::transvection(3, 2, 3, P.variable(1));
  // [t12(a), t23(b)] = t13(ab) with [x,y] = x y x^-1 y^-1
  CHECK(group_commutator(x, y) == ExactMatrix::transvection(3, 1, 3, P.variable(0) * P.variable(1)));
  CHECK(conj_left(x, y) == mat_mul(mat_mul(x, y), mat_inverse(x)));
  CHECK(conj_right(y, x) == mat_mul(mat_mul(mat_inverse(x), y), x));
  auto d = first_difference(x, y);
  REQUIRE(d.has_value());
  CHECK(d->row == 0);
  CHECK(d->col == 1);
  CHECK_FALSE(first_difference(x, x).has_value());
}
