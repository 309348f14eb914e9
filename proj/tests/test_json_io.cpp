#include <doctest.h>

#include "extlevel/json_io.hpp"
#include "generators.hpp"

using namespace extlevel;

TEST_CASE("ring names and descriptors") {
  CHECK(parse_ring_name("z/9") == Ring::modular(9));
  CHECK(parse_ring_name("Z/25") == Ring::modular(25));
  CHECK(parse_ring_name("f5") == Ring::modular(5));
  CHECK(parse_ring_name("int") == Ring::integers());
  CHECK(parse_ring_name("poly:xi,zeta") == Ring::poly({"xi", "zeta"}));
  CHECK_THROWS_AS(parse_ring_name("f9"), JsonError);
  CHECK_THROWS_AS(parse_ring_name("z/"), JsonError);
  CHECK_THROWS_AS(parse_ring_name("q"), JsonError);
  for (auto R : {Ring::modular(9), Ring::integers(), Ring::poly({"a", "b", "c"})})
    CHECK(ring_from_json(ring_to_json(R)) == R);
}

TEST_CASE("elements and matrices round-trip") {
  gen::Rng rng(19);
  for (auto R : {Ring::modular(27), Ring::integers(), Ring::poly({"xi", "zeta"})}) {
    for (int it = 0; it < 20; ++it) {
      auto x = gen::element(R, rng);
      CHECK(element_from_json(R, element_to_json(x)) == x);
    }
    auto g = gen::matrix(R, 4, rng);
    CHECK(matrix_from_json(Json::parse(matrix_to_json(g).dump())) == g);
  }
  auto Z = Ring::integers();
  auto big = Z.from_mpz(mpz_class("123456789012345678901234567890"));
  CHECK(element_to_json(big).is_string());
  CHECK(element_from_json(Z, element_to_json(big)) == big);
  auto P = Ring::poly({"xi", "zeta"});
  CHECK(element_from_json(P, "xi*zeta - 2") == P.variable(0) * P.variable(1) - P.from_int(2));
}

TEST_CASE("matrix input validation") {
  auto R = Ring::modular(9);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"entries":[[1]]})")), JsonError);
  CHECK(matrix_from_json(Json::parse(R"({"entries":[[1,2],[3,4]]})"), R).at(1, 0) == R.from_int(3));
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dim":2,"entries":[[1,2],[3]]})"), R), JsonError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), JsonError);
}

TEST_CASE("report shapes") {
  CheckReport r;
  r.id = "X.1";
  r.anchor = "a = b";
  r.pass = false;
  r.diff = "entry (0,1): 1 != 2";
  auto j = report_to_json(r);
  CHECK(j["id"] == "X.1");
  CHECK(j["diff"] == "entry (0,1): 1 != 2");
  auto Z9 = Ring::modular(9);
  CHECK(ideal_to_json(FiniteIdeal(Z9, 3)) == Json::array({0, 3, 6}));
  MembershipVerdict v{MembershipTag::NotFound, std::nullopt, std::nullopt, "why"};
  CHECK(membership_to_json(v)["tag"] == "NotFound");
}
