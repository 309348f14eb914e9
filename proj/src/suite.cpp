#include "extlevel/suite.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "extlevel/transvection.hpp"

namespace extlevel {

namespace {

using TP = TransvectionProduct;

const Ring& sym_ring() {
  static const Ring R = Ring::poly({"xi", "zeta", "zeta1"});
  return R;
}

// Index strings use one base-36 digit per entry, so 10, 11, 12 are a, b, c.
WeightIndex ix(const WedgeSpec& s, const char* text) {
  std::vector<int> v;
  for (const char* p = text; *p; ++p) {
    char c = *p;
    v.push_back(c >= '0' && c <= '9' ? c - '0' : c - 'a' + 10);
  }
  WeightIndex I(s.n(), v);
  if (I.size() != s.m()) throw IndexError(std::string("bad suite index ") + text);
  return I;
}

// Collects identities for one case and remembers the first failure.
class Checker {
 public:
  explicit Checker(WedgeSpec spec, Ring ring = sym_ring()) : spec_(std::move(spec)), ring_(ring) {}

  RingElement e(const char* expr) const { return parse_element(ring_, expr); }
  TP t(const char* I, const char* J, const char* arg) const {
    return TP{TransvectionTerm{ix(spec_, I), ix(spec_, J), e(arg)}};
  }
  TP w(int i, int j, const char* arg) const { return TP{WedgeTerm{i, j, e(arg)}}; }
  const WedgeSpec& spec() const { return spec_; }

  void same(const std::string& label, const TP& lhs, const TP& rhs) {
    same(label, realize(spec_, ring_, lhs), realize(spec_, ring_, rhs));
  }
  void same(const std::string& label, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    ++out_.identities;
    if (!out_.pass) return;
    if (auto d = first_difference(lhs, rhs)) {
      out_.pass = false;
      out_.diff = label + ": " + d->to_string();
    }
  }
  void require(const std::string& label, bool ok) {
    ++out_.identities;
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.diff = label;
    }
  }
  CheckOutcome done() const { return out_; }

 private:
  WedgeSpec spec_;
  Ring ring_;
  CheckOutcome out_;
};

// ---- exterior square, n = 6 ----------------------------------------------

CheckOutcome l4_1() {
  Checker c({6, 2});
  auto x = c.t("12", "34", "xi");
  c.same("[t12,34(xi), W t4,2(zeta)]", commutator(x, c.w(4, 2, "zeta")),
         c.t("14", "23", "-xi*zeta^2") * c.t("14", "34", "-zeta*xi") * c.t("12", "23", "-xi*zeta"));
  c.same("paired +-zeta", commutator(x, c.w(4, 2, "zeta")) * commutator(x, c.w(4, 2, "-zeta")),
         c.t("14", "23", "-2*xi*zeta^2"));
  return c.done();
}

CheckOutcome l4_2() {
  Checker c({6, 2});
  c.same("[t12,34(xi), W t4,5(zeta)]", commutator(c.t("12", "34", "xi"), c.w(4, 5, "zeta")),
         c.t("12", "35", "xi*zeta"));
  return c.done();
}

CheckOutcome l4_3() {
  Checker c({6, 2});
  c.same("[t12,13(xi), W t1,4(zeta)]", commutator(c.t("12", "13", "xi"), c.w(1, 4, "zeta")),
         c.t("12", "34", "-xi*zeta"));
  auto y = c.t("12", "34", "-xi*zeta");
  c.same("[t12,34(-xi zeta), W t4,1(-zeta1)]", commutator(y, c.w(4, 1, "-zeta1")),
         c.t("24", "13", "-zeta1^2*xi*zeta") * c.t("12", "13", "-xi*zeta*zeta1") *
             c.t("24", "34", "zeta1*xi*zeta"));
  c.same("[t12,34(-xi zeta), W t4,1(zeta1)]", commutator(y, c.w(4, 1, "zeta1")),
         c.t("24", "13", "-zeta1^2*xi*zeta") * c.t("12", "13", "xi*zeta*zeta1") *
             c.t("24", "34", "-zeta1*xi*zeta"));
  return c.done();
}

CheckOutcome l4_4() {
  Checker c({6, 2});
  c.same("[t12,23(xi), W t4,2(zeta)]", commutator(c.t("12", "23", "xi"), c.w(4, 2, "zeta")),
         c.t("14", "23", "-zeta*xi"));
  return c.done();
}

CheckOutcome l4_5() {
  Checker c({6, 2});
  auto x = c.t("45", "16", "xi");
  c.same("[t45,16(xi), W t6,4(zeta1)]", commutator(x, c.w(6, 4, "zeta1")),
         c.t("56", "16", "zeta1*xi") * c.t("45", "14", "xi*zeta1") * c.t("56", "14", "-zeta1^2*xi"));
  c.same("paired +-zeta1", commutator(x, c.w(6, 4, "zeta1")) * commutator(x, c.w(6, 4, "-zeta1")),
         c.t("56", "14", "-2*zeta1^2*xi"));
  auto u = c.t("45", "14", "xi*zeta1") * c.t("56", "16", "zeta1*xi");
  auto v = c.t("14", "34", "-zeta*xi") * c.t("12", "23", "-xi*zeta");
  c.same("two-factor commutator", commutator(u, v), c.t("45", "34", "-xi^2*zeta1*zeta"));
  return c.done();
}

// a = t12,23(xi), b = t34,23(zeta xi), c = t23,12(-zeta), d = t23,34(1)
struct L5Words {
  Checker c{WedgeSpec(6, 2)};
  TP a = c.t("12", "23", "xi");
  TP b = c.t("34", "23", "zeta*xi");
  TP cc = c.t("23", "12", "-zeta");
  TP d = c.t("23", "34", "1");
};

CheckOutcome l5_a() {
  L5Words s;
  auto& c = s.c;
  c.same("z12,34(xi,zeta) = [ab,cd]",
         z_generator(ix(c.spec(), "12"), ix(c.spec(), "34"), c.e("xi"), c.e("zeta")),
         commutator(s.a * s.b, s.cc * s.d));
  auto parts = abcd_decompose(s.a, s.b, s.cc, s.d);
  c.same("[ab,cd] decomposition", commutator(s.a * s.b, s.cc * s.d), parts[0] * parts[1] * parts[2] * parts[3]);
  c.same("[b,c]", commutator(s.b, s.cc), c.t("34", "12", "-zeta^2*xi"));
  return c.done();
}

CheckOutcome l5_b() {
  L5Words s;
  auto& c = s.c;
  c.same("^c[b,d]", conjugate(s.cc, commutator(s.b, s.d)),
         c.t("34", "14", "xi*zeta^2*(1+xi*zeta)") * c.t("23", "14", "xi*zeta^2") *
             conjugate(c.w(3, 1, "zeta"), commutator(c.t("34", "23", "xi*zeta"), c.w(2, 4, "-1"))));
  return c.done();
}

CheckOutcome l5_c() {
  L5Words s;
  auto& c = s.c;
  c.same("[a,c]", commutator(s.a, s.cc), commutator(s.a, c.w(3, 1, "zeta")));
  return c.done();
}

CheckOutcome l5_d() {
  L5Words s;
  auto& c = s.c;
  c.same("^c[a,d]", conjugate(s.cc, commutator(s.a, s.d)),
         c.t("23", "14", "-xi*zeta^2") * c.t("12", "14", "xi*zeta") *
             conjugate(c.w(3, 1, "zeta"), commutator(s.a, c.w(2, 4, "-1"))));
  return c.done();
}

// ---- exterior cube, n = 6: I = 123, J = 145, V = 125, W = 134 -------------

struct ArfWords {
  Checker c{WedgeSpec(6, 3)};
  TP a = c.t("145", "125", "zeta*xi");
  TP b = c.t("123", "125", "xi");
  TP cc = c.t("125", "123", "-zeta");
  TP d = c.t("125", "145", "1");
};

CheckOutcome arf_a() {
  ArfWords s;
  auto& c = s.c;
  c.same("tIJ = [tIV(xi), tVJ(1)]", c.t("123", "145", "xi"),
         commutator(c.t("123", "125", "xi"), c.t("125", "145", "1")));
  c.same("zIJ = [ab,cd]", z_generator(ix(c.spec(), "123"), ix(c.spec(), "145"), c.e("xi"), c.e("zeta")),
         commutator(s.a * s.b, s.cc * s.d));
  auto parts = abcd_decompose(s.a, s.b, s.cc, s.d);
  c.same("[ab,cd] decomposition", commutator(s.a * s.b, s.cc * s.d), parts[0] * parts[1] * parts[2] * parts[3]);
  return c.done();
}

CheckOutcome arf_b() {
  ArfWords s;
  auto& c = s.c;
  c.same("^c[b,d]", conjugate(s.cc, commutator(s.b, s.d)),
         c.t("125", "134", "-xi*zeta^2") * c.t("123", "134", "xi*zeta") *
             conjugate(c.w(5, 3, "-zeta"), c.t("123", "145", "xi")));
  return c.done();
}

CheckOutcome arf_c() {
  ArfWords s;
  auto& c = s.c;
  c.same("[a,c]", commutator(s.a, s.cc), c.t("145", "123", "-zeta^2*xi"));
  return c.done();
}

CheckOutcome arf_d() {
  ArfWords s;
  auto& c = s.c;
  auto J = ix(c.spec(), "145"), V = ix(c.spec(), "125");
  c.same("^c[a,d]", conjugate(s.cc, commutator(s.a, s.d)),
         c.t("145", "134", "xi*zeta^2*(1+xi*zeta)") * c.t("125", "134", "xi*zeta^2") *
             conjugate(c.w(5, 3, "-zeta"), c.t("145", "125", "xi*zeta")) *
             conjugate(c.w(5, 3, "-zeta"), z_generator(J, V, c.e("-zeta*xi"), c.e("1"))));
  return c.done();
}

// ---- m = 4, n = 12 ----------------------------------------------------------

void side_condition(Checker& c, int k) {
  c.require("n >= 3m - 2k for k = " + std::to_string(k), c.spec().n() >= 3 * c.spec().m() - 2 * k);
}

CheckOutcome pie_1() {
  Checker c({12, 4});
  side_condition(c, 0);
  c.same("[t1234,5678(xi), W t8,4(zeta)]", commutator(c.t("1234", "5678", "xi"), c.w(8, 4, "zeta")),
         c.t("1234", "4567", "-xi*zeta") * c.t("1238", "5678", "-zeta*xi") * c.t("1238", "4567", "-zeta^2*xi"));
  c.same("[t49ab,123c(xi), W tc,4(zeta1)]", commutator(c.t("49ab", "123c", "xi"), c.w(12, 4, "zeta1")),
         c.t("49ab", "1234", "xi*zeta1") * c.t("9abc", "123c", "zeta1*xi") * c.t("9abc", "1234", "-zeta1^2*xi"));
  auto x = c.t("1234", "4567", "-xi*zeta") * c.t("1238", "5678", "-zeta*xi");
  auto y = c.t("49ab", "1234", "xi*zeta1") * c.t("9abc", "123c", "zeta1*xi");
  c.same("double commutator", commutator(x, y), c.t("49ab", "4567", "xi^2*zeta1*zeta"));
  return c.done();
}

CheckOutcome pie_2() {
  Checker c({12, 4});
  side_condition(c, 1);
  c.same("[t1234,1567(xi), W t7,4(zeta)]", commutator(c.t("1234", "1567", "xi"), c.w(7, 4, "zeta")),
         c.t("1234", "1456", "xi*zeta") * c.t("1237", "1567", "-zeta*xi") * c.t("1237", "1456", "zeta^2*xi"));
  c.same("[t1489,123a(xi), W ta,4(zeta1)]", commutator(c.t("1489", "123a", "xi"), c.w(10, 4, "zeta1")),
         c.t("1489", "1234", "xi*zeta1") * c.t("189a", "123a", "-zeta1*xi") * c.t("189a", "1234", "zeta1^2*xi"));
  auto x = c.t("1234", "1456", "xi*zeta") * c.t("1237", "1567", "-zeta*xi");
  auto y = c.t("1489", "1234", "xi*zeta1") * c.t("189a", "123a", "-zeta1*xi");
  c.same("double commutator", commutator(x, y), c.t("1489", "1456", "-xi^2*zeta1*zeta"));
  return c.done();
}

CheckOutcome pie_3() {
  Checker c({12, 4});
  side_condition(c, 2);
  c.same("[t1234,1256(xi), W t6,4(zeta)]", commutator(c.t("1234", "1256", "xi"), c.w(6, 4, "zeta")),
         c.t("1234", "1245", "-xi*zeta") * c.t("1236", "1256", "-zeta*xi") * c.t("1236", "1245", "-zeta^2*xi"));
  c.same("[t1248,1237(xi), W t7,4(zeta1)]", commutator(c.t("1248", "1237", "xi"), c.w(7, 4, "zeta1")),
         c.t("1248", "1234", "xi*zeta1") * c.t("1278", "1237", "-zeta1*xi") * c.t("1278", "1234", "zeta1^2*xi"));
  auto x = c.t("1234", "1245", "-xi*zeta") * c.t("1236", "1256", "-zeta*xi");
  auto y = c.t("1248", "1234", "xi*zeta1") * c.t("1278", "1237", "-zeta1*xi");
  c.same("double commutator", commutator(x, y), c.t("1248", "1245", "xi^2*zeta1*zeta"));
  return c.done();
}

// ---- relations, n = 5, m = 3 -----------------------------------------------

CheckOutcome prel_1() {
  Checker c({5, 3});
  auto wt = c.w(1, 2, "xi*zeta");
  c.same("W t1,2(xi zeta)", wt,
         c.t("134", "234", "xi*zeta") * c.t("135", "235", "xi*zeta") * c.t("145", "245", "xi*zeta"));
  auto z1 = c.t("134", "234", "-xi*zeta") * c.t("145", "245", "xi*zeta");
  auto z2 = c.t("145", "245", "xi*zeta") * c.t("135", "235", "-xi*zeta");
  c.same("[t134,245(xi), W t5,3(zeta)]", commutator(c.t("134", "245", "xi"), c.w(5, 3, "zeta")),
         z1 * c.t("145", "234", "zeta^2*xi"));
  c.same("[t135,245(xi), W t4,3(-zeta)]", commutator(c.t("135", "245", "xi"), c.w(4, 3, "-zeta")),
         z2 * c.t("145", "235", "zeta^2*xi"));
  c.same("product", wt * z1 * z2, c.t("145", "245", "3*xi*zeta"));
  c.require("coefficient 3 = C(n-2, m-1)", c.spec().residue() == 3);
  return c.done();
}

// ---- generators --------------------------------------------------------------

CheckOutcome pf_1() {
  CheckOutcome out;
  for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 3}}) {
    Checker c({n, m});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int h = 1; h <= n; ++h) {
          if (i == j || j == h || i == h) continue;
          c.same("W t" + std::to_string(i) + "," + std::to_string(j),
                 c.w(i, j, "zeta"), commutator(c.w(i, h, "zeta"), c.w(h, j, "1")));
        }
    auto r = c.done();
    out.identities += r.identities;
    if (out.pass && !r.pass) out = {false, out.identities, r.diff};
  }
  return out;
}

CheckOutcome pf_2() {
  CheckOutcome out;
  struct Inst {
    int n, m;
    const char *I, *V, *J;
    int a, b;  // V -> J removes a and adds b
  };
  for (const Inst& in : {Inst{6, 3, "123", "125", "145", 2, 4}, Inst{6, 2, "12", "14", "34", 1, 3},
                         Inst{7, 3, "123", "456", "457", 6, 7}}) {
    Checker c({in.n, in.m});
    auto V = ix(c.spec(), in.V), J = ix(c.spec(), in.J);
    c.same("tIJ = [tIV(xi), tVJ(1)]", c.t(in.I, in.J, "xi"), commutator(c.t(in.I, in.V, "xi"), c.t(in.V, in.J, "1")));
    const WeightIndex L = V.without(in.a);
    const int s = insert_sign(L, in.a) * insert_sign(L, in.b);
    c.require("V -> J is one shift", L.with(in.b) == J);
    c.same("tIJ = [tIV(xi), W t(+-1)]", c.t(in.I, in.J, "xi"),
           commutator(c.t(in.I, in.V, "xi"), c.w(in.a, in.b, s > 0 ? "1" : "-1")));
    auto r = c.done();
    out.identities += r.identities;
    if (out.pass && !r.pass) out = {false, out.identities, r.diff};
  }
  return out;
}

// ---- universal identities on random instances over Z/9 ---------------------

struct RandomGL {
  WedgeSpec spec{4, 2};
  Ring R = Ring::modular(9);
  std::mt19937_64 rng;
  explicit RandomGL(std::uint64_t seed) : rng(seed) {}

  RingElement el() { return R.from_int(long(rng() % 9)); }
  ExactMatrix any(std::size_t d) {
    ExactMatrix g(R, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) g.at(r, c) = el();
    return g;
  }
  ExactMatrix invertible(std::size_t d) {
    for (;;) {
      ExactMatrix g = any(d);
      if (is_unit(determinant(g))) return g;
    }
  }
  ExactMatrix image() { return wedge_matrix(spec, invertible(4)); }
  ExactMatrix congruence() {
    ExactMatrix y = ExactMatrix::identity(R, spec.N());
    for (std::size_t r = 0; r < spec.N(); ++r)
      for (std::size_t c = 0; c < spec.N(); ++c) y.at(r, c) += el().scaled(3);
    return y;
  }
  ExactMatrix wedge_elementary() {
    int i = int(rng() % 4) + 1, j;
    do j = int(rng() % 4) + 1; while (j == i);
    return wedge_matrix(spec, ExactMatrix::transvection(4, i, j, el()));
  }
  ExactMatrix relative_elementary() {
    std::size_t I = rng() % spec.N(), J;
    do J = rng() % spec.N(); while (J == I);
    return realize_terms(spec, R, {TransvectionTerm{spec.index(I), spec.index(J), el().scaled(3)}});
  }
};

ExactMatrix mul(std::initializer_list<ExactMatrix> ms) {
  auto it = ms.begin();
  ExactMatrix acc = *it++;
  for (; it != ms.end(); ++it) acc = mat_mul(acc, *it);
  return acc;
}

CheckOutcome lr_1() {
  RandomGL g(0x5eed01);
  Checker c(g.spec, g.R);
  for (int k = 0; k < 100; ++k) {
    ExactMatrix x = g.image(), y = g.congruence(), h = g.wedge_elementary(), e = g.relative_elementary();
    ExactMatrix xy = mat_mul(x, y);
    c.same("instance " + std::to_string(k), group_commutator(xy, mat_mul(h, e)),
           mul({conj_left(x, group_commutator(y, h)), group_commutator(x, h),
                conj_left(h, group_commutator(xy, e))}));
  }
  return c.done();
}

CheckOutcome lr_2() {
  RandomGL g(0x5eed02);
  Checker c(g.spec, g.R);
  for (int k = 0; k < 25; ++k) {
    ExactMatrix u = g.invertible(6), v = g.invertible(6), w = g.invertible(6);
    c.same("instance " + std::to_string(k), group_commutator(mat_mul(u, v), w),
           mat_mul(conj_left(u, group_commutator(v, w)), group_commutator(u, w)));
  }
  return c.done();
}

CheckOutcome lr_3() {
  RandomGL g(0x5eed03);
  Checker c(g.spec, g.R);
  for (int k = 0; k < 25; ++k) {
    ExactMatrix x = g.invertible(6), y = g.invertible(6), z = g.invertible(6);
    ExactMatrix xi = mat_inverse(x), yi = mat_inverse(y), zi = mat_inverse(z);
    c.same("instance " + std::to_string(k), group_commutator(z, group_commutator(x, y)),
           mat_mul(conj_left(mat_mul(x, z), group_commutator(group_commutator(zi, xi), y)),
                   conj_left(mat_mul(x, y), group_commutator(group_commutator(yi, z), xi))));
  }
  return c.done();
}

CheckOutcome lr_4() {
  RandomGL g(0x5eed04);
  Checker c(g.spec, g.R);
  for (int k = 0; k < 25; ++k) {
    ExactMatrix x = g.invertible(6), y = g.invertible(6), z = g.invertible(6);
    ExactMatrix a = group_commutator(mat_inverse(x), z), b = group_commutator(z, y);
    c.same("instance " + std::to_string(k), group_commutator(a, mat_mul(b, y)),
           mat_mul(group_commutator(a, b), conj_left(b, group_commutator(a, y))));
  }
  return c.done();
}

CheckOutcome hw_1() {
  RandomGL g(0x5eed05);
  Checker c(g.spec, g.R);
  for (int k = 0; k < 25; ++k) {
    auto r = hall_witt_check(g.invertible(6), g.invertible(6), g.invertible(6));
    c.require("instance " + std::to_string(k) + (r.diff ? ": " + r.diff->to_string() : ""), r.ok);
  }
  Ring P = sym_ring();
  auto rep = hall_witt_check(ExactMatrix::transvection(3, 1, 2, P.variable("xi")),
                             ExactMatrix::transvection(3, 2, 3, P.variable("zeta")),
                             ExactMatrix::transvection(3, 3, 1, P.variable("zeta1")));
  c.require("symbolic triple", rep.ok);
  return c.done();
}

// ---- levels ------------------------------------------------------------------

CheckOutcome leq0_1() {
  Checker c({7, 3});
  auto x = c.t("123", "456", "xi");
  c.same("[t123,456(xi), W t6,7(zeta)]", commutator(x, c.w(6, 7, "zeta")), c.t("123", "457", "xi*zeta"));
  c.same("paired +-zeta", commutator(x, c.w(4, 3, "zeta")) * commutator(x, c.w(4, 3, "-zeta")),
         c.t("124", "356", "2*zeta^2*xi"));
  return c.done();
}

CheckOutcome plg_1() {
  Checker c({6, 3});
  c.same("[t123,124(xi), W t2,5(zeta)]", commutator(c.t("123", "124", "xi"), c.w(2, 5, "zeta")),
         c.t("123", "145", "-xi*zeta"));
  c.same("[t123,145(-xi zeta), W t5,2(zeta1)]", commutator(c.t("123", "145", "-xi*zeta"), c.w(5, 2, "zeta1")),
         c.t("135", "124", "-zeta1^2*xi*zeta") * c.t("123", "124", "xi*zeta*zeta1") *
             c.t("135", "145", "-zeta1*xi*zeta"));
  return c.done();
}

CheckOutcome plg_2() {
  Checker c({6, 3});
  c.same("tIJ(xi zeta) = [tIJ(xi), W t5,3(zeta), W t3,5(1)]", c.t("123", "124", "xi*zeta"),
         commutator({c.t("123", "124", "xi"), c.w(5, 3, "zeta"), c.w(3, 5, "1")}));
  return c.done();
}

std::vector<CheckCase> build_registry() {
  return {
      {"HW.1", "HW", "[x,y^-1,z^-1]^x [z,x^-1,y^-1]^z [y,z^-1,x^-1]^y = e", hw_1},
      {"L-ARF.a", "L-ARF", "tIJ(xi) = [tIV(xi), tVJ(1)], zIJ(xi,zeta) = [ab,cd]", arf_a},
      {"L-ARF.b", "L-ARF", "^c[b,d] = tVW(-xi zeta^2) tIW(xi zeta) ^{W t(-zeta)} tIJ(xi)", arf_b},
      {"L-ARF.c", "L-ARF", "[a,c] = [tJV(zeta xi), tVI(-zeta)] = tJI(-zeta^2 xi)", arf_c},
      {"L-ARF.d", "L-ARF", "^c[a,d] = tJW(xi zeta^2(1+xi zeta)) tVW(xi zeta^2) ^{W t(-zeta)} tJV(xi zeta) ^{W t(-zeta)} zJV(-zeta xi, 1)", arf_d},
      {"L4.1", "L4", "[t12,34(xi), W t4,2(zeta)] = t14,23(-xi zeta^2) t14,34(-zeta xi) t12,23(-xi zeta)", l4_1},
      {"L4.2", "L4", "[t12,34(xi), W t4,5(zeta)] = t12,35(xi zeta)", l4_2},
      {"L4.3", "L4", "[t12,13(xi), W t1,4(zeta)] = t12,34(-xi zeta)", l4_3},
      {"L4.4", "L4", "[t12,23(xi), W t4,2(zeta)] = t14,23(-zeta xi)", l4_4},
      {"L4.5", "L4", "t45,34(-xi^2 zeta1 zeta) as a commutator of generated elements", l4_5},
      {"L5.a", "L5", "[b,c] = [t34,23(zeta xi), t23,12(-zeta)] = t34,12(-zeta^2 xi)", l5_a},
      {"L5.b", "L5", "^c[b,d] = t34,14(xi zeta^2(1+xi zeta)) t23,14(xi zeta^2) ^{W t3,1(zeta)}[t34,23(xi zeta), W t2,4(-1)]", l5_b},
      {"L5.c", "L5", "[a,c] = [a, W t3,1(zeta)]", l5_c},
      {"L5.d", "L5", "^c[a,d] = t23,14(-xi zeta^2) t12,14(xi zeta) ^{W t3,1(zeta)}[a, W t2,4(-1)]", l5_d},
      {"LEQ0.1", "LEQ0", "[t123,456(xi), W t6,7(zeta)] = t123,457(xi zeta); paired +-zeta gives t124,356(2 zeta^2 xi)", leq0_1},
      {"LR.1", "LR", "[xy, hg] = ^x[y,h] [x,h] ^h[xy,g]", lr_1},
      {"LR.2", "LR", "[uv, w] = ^u[v,w] [u,w]", lr_2},
      {"LR.3", "LR", "[z,[x,y]] = ^{xz}[[z^-1,x^-1],y] ^{xy}[[y^-1,z],x^-1]", lr_3},
      {"LR.4", "LR", "[[x^-1,z],[z,y]y] = [[x^-1,z],[z,y]] ^{[z,y]}[[x^-1,z],y]", lr_4},
      {"P-IE.1", "P-IE", "t49ab,4567(xi^2 zeta1 zeta)", pie_1},
      {"P-IE.2", "P-IE", "t1489,1456(-xi^2 zeta1 zeta)", pie_2},
      {"P-IE.3", "P-IE", "t1248,1245(xi^2 zeta1 zeta)", pie_3},
      {"P-REL.1", "P-REL", "W t1,2(xi zeta) z1 z2 = t145,245(3 xi zeta)", prel_1},
      {"PF.1", "PF", "W ti,j(zeta) = [W ti,h(zeta), W th,j(1)]", pf_1},
      {"PF.2", "PF", "tIJ(xi) = [tIV(xi), tVJ(1)] = [tIV(xi), W t(+-1)]", pf_2},
      {"PLG.1", "PLG", "[t123,124(xi), W t2,5(zeta)] = t123,145(-xi zeta)", plg_1},
      {"PLG.2", "PLG", "tIJ(xi zeta) = [tIJ(xi), W tj,i(zeta), W ti,j(+-1)]", plg_2},
  };
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::size_t SuiteReport::passed() const {
  std::size_t k = 0;
  for (const auto& r : reports) k += r.pass;
  return k;
}

const std::vector<CheckCase>& check_registry() {
  static const std::vector<CheckCase> reg = build_registry();
  return reg;
}

namespace {

CheckReport execute(const CheckCase& cc) {
  CheckReport rep;
  rep.id = cc.id;
  rep.anchor = cc.anchor;
  auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = cc.run();
    rep.pass = o.pass;
    rep.identities = o.identities;
    rep.diff = o.diff;
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.diff = std::string("exception: ") + e.what();
  }
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

CheckReport run_check(const std::string& id) {
  for (const auto& cc : check_registry())
    if (cc.id == id) return execute(cc);
  throw std::out_of_range("unknown check id: " + id);
}

SuiteReport run_all(const std::string& filter, int jobs) {
  std::vector<const CheckCase*> selected;
  for (const auto& cc : check_registry())
    if (filter.empty() || cc.id == filter || cc.group == filter) selected.push_back(&cc);
  SuiteReport out;
  out.reports.resize(selected.size());
  const long count = long(selected.size());
  if (jobs < 1) jobs = 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
  for (long k = 0; k < count; ++k) out.reports[std::size_t(k)] = execute(*selected[std::size_t(k)]);
  return out;
}

}  // namespace extlevel
