#include <doctest.h>

#include <json.hpp>

#include "extlevel/diagram.hpp"

using namespace extlevel;

namespace {

nlohmann::json emit_json(int n, int m, std::optional<int> root, std::optional<WeightPair> cls = std::nullopt) {
  return nlohmann::json::parse(emit_diagram({n, m, root, DiagramFormat::Json, cls}));
}

WeightPair pair(int n, const char* I, const char* J) {
  return {WeightIndex::parse(n, I), WeightIndex::parse(n, J)};
}

}  // namespace

TEST_CASE("alpha_2 paths at (5,2)") {
  auto p = alpha_paths(5, 2, 2);
  REQUIRE(p.size() == 3);
  CHECK(p[0].from.label() == "13");
  CHECK(p[0].to.label() == "12");
  CHECK(p[1].from.label() == "34");
  CHECK(p[1].to.label() == "24");
  CHECK(p[2].from.label() == "35");
  CHECK(p[2].to.label() == "25");
}

TEST_CASE("vertex and path counts follow the binomials") {
  for (int n = 3; n <= 8; ++n)
    for (int m = 1; m < n; ++m) {
      for (int k = 1; k < n; ++k) CHECK(alpha_paths(n, m, k).size() == binomial(n - 2, m - 1));
      CHECK(diagram_edges(n, m).size() == std::size_t(n - 1) * binomial(n - 2, m - 1));
      auto j = emit_json(n, m, 1);
      CHECK(j["vertices"].size() == binomial(n, m));
      CHECK(j["paths"].size() == binomial(n - 2, m - 1));
    }
  auto j = emit_json(6, 3, 4);
  CHECK(j["vertices"].size() == 20);
  CHECK(j["paths"].size() == 6);
}

TEST_CASE("standard representation is a path") {
  auto j = emit_json(3, 1, std::nullopt);
  CHECK(j["vertices"] == nlohmann::json::array({"1", "2", "3"}));
  REQUIRE(j["edges"].size() == 2);
  CHECK(j["edges"][0]["from"] == "2");
  CHECK(j["edges"][0]["to"] == "1");
  CHECK(j["paths"].empty());
}

TEST_CASE("every format is deterministic") {
  for (auto f : {DiagramFormat::Dot, DiagramFormat::Tikz, DiagramFormat::Json}) {
    DiagramSpec s{6, 3, 4, f, std::nullopt};
    CHECK(emit_diagram(s) == emit_diagram(s));
  }
  auto dot = emit_diagram({5, 2, 2, DiagramFormat::Dot, std::nullopt});
  CHECK(dot.find("\"13\" -> \"12\" [label=\"2\", color=red") != std::string::npos);
  CHECK(dot.find("\"14\" -> \"13\" [label=\"3\", arrowhead=none]") != std::string::npos);
  auto tikz = emit_diagram({5, 2, 2, DiagramFormat::Tikz, std::nullopt});
  CHECK(tikz.find("\\begin{tikzpicture}") == 0);
}

TEST_CASE("path scenarios match the commutator classes") {
  CHECK(path_scenario(pair(5, "14", "15"), 2) == PathScenario::Disjoint);
  CHECK(path_scenario(pair(5, "13", "35"), 2) == PathScenario::OneEnd);
  CHECK(path_scenario(pair(5, "13", "24"), 2) == PathScenario::BothEnds);
  auto j = emit_json(5, 2, 2, pair(5, "13", "35"));
  auto r2 = j["classify"]["roots"][1];
  CHECK(r2["root"] == 2);
  CHECK(r2["scenario"] == "one_end");
  CHECK(r2["commutator"] == "t_{12,35}(-xi*zeta)");
  auto b = emit_json(5, 2, 2, pair(5, "13", "24"))["classify"]["roots"][1];
  CHECK(b["commutator"] == "t_{12,24}(-xi*zeta) t_{12,34}(xi*zeta^2) t_{13,34}(xi*zeta)");
  auto d = emit_json(5, 2, 2, pair(5, "14", "15"))["classify"]["roots"][1];
  CHECK(d["class"] == "Vanishes");
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(parse_format("svg"), IndexError);
  CHECK_THROWS_AS(emit_diagram({5, 5, std::nullopt, DiagramFormat::Dot, std::nullopt}), IndexError);
  CHECK_THROWS_AS(emit_diagram({5, 2, 5, DiagramFormat::Dot, std::nullopt}), IndexError);
  CHECK_THROWS_AS(emit_diagram({5, 2, 2, DiagramFormat::Json, pair(5, "123", "124")}), IndexError);
}
