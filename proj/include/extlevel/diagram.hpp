#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extlevel/index.hpp"

namespace extlevel {

enum class DiagramFormat { Dot, Tikz, Json };
DiagramFormat parse_format(std::string_view name);

struct DiagramSpec {
  int n = 0;
  int m = 0;
  std::optional<int> highlight_root;  // k for the simple root alpha_k = e_k - e_{k+1}
  DiagramFormat format = DiagramFormat::Dot;
  std::optional<WeightPair> classify;  // annotate the commutator scenarios of this pair (json)
};

/// I -> I - (k+1) + k, i.e. the path of alpha_k under the image of t_{k,k+1}.
struct DiagramEdge {
  WeightIndex from;
  WeightIndex to;
  int root;
  bool operator==(const DiagramEdge&) const = default;
};

/// All edges, grouped by root, sources in lex order.
std::vector<DiagramEdge> diagram_edges(int n, int m);
/// Edges of alpha_k alone; there are C(n-2, m-1) of them.
std::vector<DiagramEdge> alpha_paths(int n, int m, int k);

enum class PathScenario { Disjoint, OneEnd, BothEnds };
const char* scenario_name(PathScenario s);
/// Where (I,J) sits relative to the alpha_k paths: I a path source, J a path target.
PathScenario path_scenario(const WeightPair& p, int k);

/// Throws IndexError on a bad shape or root.
std::string emit_diagram(const DiagramSpec& spec);

}  // namespace extlevel
