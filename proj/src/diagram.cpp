#include "extlevel/diagram.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "extlevel/transvection.hpp"

namespace extlevel {

DiagramFormat parse_format(std::string_view name) {
  if (name == "dot") return DiagramFormat::Dot;
  if (name == "tikz") return DiagramFormat::Tikz;
  if (name == "json") return DiagramFormat::Json;
  throw IndexError("unknown diagram format '" + std::string(name) + "'");
}

static void check_shape(int n, int m) {
  if (n < 2 || n > 32 || m < 1 || m >= n)
    throw IndexError("diagram needs 1 <= m < n <= 32, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

std::vector<DiagramEdge> alpha_paths(int n, int m, int k) {
  check_shape(n, m);
  if (k < 1 || k >= n) throw IndexError("simple root index out of range: " + std::to_string(k));
  std::vector<DiagramEdge> out;
  for (auto& I : enumerate_indices(n, m))
    if (I.contains(k + 1) && !I.contains(k)) out.push_back({I, I.without(k + 1).with(k), k});
  return out;
}

std::vector<DiagramEdge> diagram_edges(int n, int m) {
  std::vector<DiagramEdge> out;
  for (int k = 1; k < n; ++k) {
    auto p = alpha_paths(n, m, k);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

const char* scenario_name(PathScenario s) {
  switch (s) {
    case PathScenario::Disjoint: return "disjoint";
    case PathScenario::OneEnd: return "one_end";
    case PathScenario::BothEnds: return "both_ends";
  }
  return "?";
}

PathScenario path_scenario(const WeightPair& p, int k) {
  bool a = p.I.contains(k + 1) && !p.I.contains(k);
  bool b = p.J.contains(k) && !p.J.contains(k + 1);
  if (a && b) return PathScenario::BothEnds;
  return (a || b) ? PathScenario::OneEnd : PathScenario::Disjoint;
}

namespace {

bool highlighted(const DiagramSpec& s, const DiagramEdge& e) {
  return s.highlight_root && *s.highlight_root == e.root;
}

std::string emit_dot(const DiagramSpec& s, const std::vector<WeightIndex>& verts,
                     const std::vector<DiagramEdge>& edges) {
  std::ostringstream os;
  os << "digraph wedge_" << s.n << "_" << s.m << " {\n  rankdir=LR;\n  node [shape=point, xlabel=\"\\N\"];\n";
  for (auto& v : verts) os << "  \"" << v.label() << "\";\n";
  for (auto& e : edges) {
    os << "  \"" << e.from.label() << "\" -> \"" << e.to.label() << "\" [label=\"" << e.root << "\"";
    if (highlighted(s, e)) os << ", color=red, penwidth=2";
    else os << ", arrowhead=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string tikz_name(const WeightIndex& I) {
  std::string out = "v";
  for (int v : I.elems()) out += "-" + std::to_string(v);
  return out;
}

std::string emit_tikz(const DiagramSpec& s, const std::vector<WeightIndex>& verts,
                      const std::vector<DiagramEdge>& edges) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[x=1.2cm, y=0.9cm, every node/.style={circle, fill, inner sep=1pt}]\n";
  // column = distance from the highest weight, row = order within the column
  std::map<int, int> rows;
  const int base = s.m * (s.m + 1) / 2;
  for (auto& v : verts) {
    int sum = 0;
    for (int x : v.elems()) sum += x;
    int col = sum - base;
    int row = rows[col]++;
    os << "  \\node[label=above:" << v.label() << "] (" << tikz_name(v) << ") at (" << col << "," << -row
       << ") {};\n";
  }
  for (auto& e : edges) {
    if (highlighted(s, e))
      os << "  \\draw[->, thick, red, bend right] (" << tikz_name(e.from) << ") to node[draw=none, fill=none, "
         << "label=below:" << e.root << "] {} (" << tikz_name(e.to) << ");\n";
    else
      os << "  \\draw (" << tikz_name(e.from) << ") -- (" << tikz_name(e.to) << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

nlohmann::ordered_json classify_json(const DiagramSpec& s) {
  const auto& p = *s.classify;
  auto ring = Ring::poly({"xi", "zeta"});
  auto xi = ring.variable(0), zeta = ring.variable(1);
  nlohmann::ordered_json out;
  out["I"] = p.I.label();
  out["J"] = p.J.label();
  auto roots = nlohmann::ordered_json::array();
  for (int k = 1; k < s.n; ++k) {
    auto cls = classify_commutator(p.I, p.J, k, k + 1);
    nlohmann::ordered_json r;
    r["root"] = k;
    r["scenario"] = scenario_name(path_scenario(p, k));
    r["class"] = tag_name(cls.tag);
    if (cls.tag == CommutatorTag::Vanishes) r["commutator"] = "e";
    else if (cls.tag != CommutatorTag::Degenerate) r["commutator"] = instantiate(cls, xi, zeta).to_string();
    roots.push_back(std::move(r));
  }
  out["roots"] = std::move(roots);
  return out;
}

std::string emit_json(const DiagramSpec& s, const std::vector<WeightIndex>& verts,
                      const std::vector<DiagramEdge>& edges) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["root"] = s.highlight_root ? nlohmann::ordered_json(*s.highlight_root) : nlohmann::ordered_json();
  auto vs = nlohmann::ordered_json::array();
  for (auto& v : verts) vs.push_back(v.label());
  j["vertices"] = std::move(vs);
  auto es = nlohmann::ordered_json::array();
  auto paths = nlohmann::ordered_json::array();
  for (auto& e : edges) {
    es.push_back({{"from", e.from.label()}, {"to", e.to.label()}, {"root", e.root}});
    if (highlighted(s, e)) paths.push_back({{"from", e.from.label()}, {"to", e.to.label()}});
  }
  j["edges"] = std::move(es);
  j["paths"] = std::move(paths);
  if (s.classify) j["classify"] = classify_json(s);
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_diagram(const DiagramSpec& s) {
  check_shape(s.n, s.m);
  if (s.highlight_root && (*s.highlight_root < 1 || *s.highlight_root >= s.n))
    throw IndexError("simple root index out of range: " + std::to_string(*s.highlight_root));
  if (s.classify) {
    const auto& p = *s.classify;
    if (p.I.n() != s.n || p.J.n() != s.n || p.I.size() != s.m || p.J.size() != s.m)
      throw IndexError("classify pair does not match the diagram shape");
  }
  auto verts = enumerate_indices(s.n, s.m);
  auto edges = diagram_edges(s.n, s.m);
  switch (s.format) {
    case DiagramFormat::Dot: return emit_dot(s, verts, edges);
    case DiagramFormat::Tikz: return emit_tikz(s, verts, edges);
    case DiagramFormat::Json: return emit_json(s, verts, edges);
  }
  return {};
}

}  // namespace extlevel
