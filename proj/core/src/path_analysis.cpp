#include "ramsey/path_analysis.hpp"

#include <algorithm>
#include <unordered_set>

namespace ramsey {

bool is_blue_path(const ColoredGraph& g, const std::vector<VertexId>& vertices) {
  std::unordered_set<VertexId> seen;
  for (VertexId v : vertices) {
    if (!seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (g.edge_color(vertices[i], vertices[i + 1]) != Color::kBlue) return false;
  }
  return true;
}

CertResult<BluePathCert> certify_11_path(const ColoredGraph& g,
                                         std::vector<VertexId> vertices) {
  using R = CertResult<BluePathCert>;
  if (vertices.empty()) return R::fail("empty vertex list");
  if (!is_blue_path(g, vertices)) {
    return R::fail("vertices do not form a simple blue path");
  }
  const VertexId a = vertices.front();
  const VertexId b = vertices.back();
  if (g.degree(a, Color::kRed) == 0) {
    return R::fail("end " + std::to_string(a) + " heads no red path");
  }
  if (g.degree(b, Color::kRed) == 0) {
    return R::fail("end " + std::to_string(b) + " heads no red path");
  }
  if (vertices.front() > vertices.back()) {
    std::reverse(vertices.begin(), vertices.end());
  }
  return R::ok(BluePathCert{std::move(vertices), 1, 1});
}

CertResult<ExtendedPathCert> certify_extended20(const ColoredGraph& g,
                                                std::vector<VertexId> vertices) {
  using R = CertResult<ExtendedPathCert>;
  if (vertices.size() < 3) {
    return R::fail("an extended (2,0)-path needs at least 3 vertices");
  }
  std::unordered_set<VertexId> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) return R::fail("repeated vertex");

  const VertexId red_end = vertices.back();
  std::vector<VertexId> blue(vertices.begin(), vertices.end() - 1);
  if (!is_blue_path(g, blue)) {
    return R::fail("leading vertices do not form a simple blue path");
  }
  const VertexId transition = blue.back();
  if (g.edge_color(transition, red_end) != Color::kRed) {
    return R::fail("transition-to-red-end edge is not red");
  }
  if (g.longest_red_path_from(transition) < 3) {
    return R::fail("2-end needs a red path of length 2");
  }
  return R::ok(ExtendedPathCert{blue.front(), transition, red_end, std::move(blue)});
}

std::vector<LimbCert> find_limb(const ColoredGraph& g) {
  std::vector<LimbCert> out;
  std::unordered_set<VertexId> seen;
  for (VertexId v = 0; v < g.vertex_watermark(); ++v) {
    if (g.degree(v) == 0 || seen.count(v)) continue;
    // Gather the whole component over both colors.
    std::vector<VertexId> comp{v};
    std::unordered_set<VertexId> comp_set{v};
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Color c : {Color::kRed, Color::kBlue}) {
        for (VertexId w : g.neighbors(comp[i], c)) {
          if (comp_set.insert(w).second) comp.push_back(w);
        }
      }
    }
    seen.insert(comp.begin(), comp.end());
    if (comp.size() != 5) continue;

    std::size_t red_edges = 0, blue_edges = 0;
    for (VertexId x : comp) {
      red_edges += g.degree(x, Color::kRed);
      blue_edges += g.degree(x, Color::kBlue);
    }
    red_edges /= 2;
    blue_edges /= 2;
    if (red_edges != 1 || blue_edges != 3) continue;

    // x2 is the red edge's endpoint with two blue neighbors, x3 the one
    // with a single blue neighbor.
    VertexId x2 = 0, x3 = 0;
    bool found_red = false;
    for (VertexId x : comp) {
      if (g.degree(x, Color::kRed) == 1) {
        VertexId y = g.neighbors(x, Color::kRed).front();
        if (g.degree(x, Color::kBlue) == 2 && g.degree(y, Color::kBlue) == 1) {
          x2 = x;
          x3 = y;
          found_red = true;
          break;
        }
      }
    }
    if (!found_red) continue;
    const auto& arms = g.neighbors(x2, Color::kBlue);
    VertexId x4 = g.neighbors(x3, Color::kBlue).front();
    VertexId x1 = std::min(arms[0], arms[1]);
    VertexId x5 = std::max(arms[0], arms[1]);
    if (g.degree(x1) != 1 || g.degree(x5) != 1 || g.degree(x4) != 1) continue;
    out.push_back({x1, x2, x3, x4, x5});
  }
  return out;
}

}  // namespace ramsey
