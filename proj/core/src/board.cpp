#include "ramsey/board.hpp"

#include <algorithm>
#include <unordered_set>

namespace ramsey {

namespace {
const std::vector<VertexId> kNoNeighbors;
}

std::uint64_t ColoredGraph::edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void ColoredGraph::touch(VertexId v) {
  if (vertex_budget_ && v >= *vertex_budget_) {
    throw VertexBudgetError("vertex budget exhausted at id " + std::to_string(v));
  }
  if (v >= next_vertex_) {
    next_vertex_ = v + 1;
  }
  for (auto& per_color : adj_) {
    if (per_color.size() <= v) per_color.resize(v + 1);
  }
}

VertexId ColoredGraph::allocate_free_vertex() {
  if (vertex_budget_ && next_vertex_ >= *vertex_budget_) {
    throw VertexBudgetError("vertex budget exhausted at id " +
                            std::to_string(next_vertex_));
  }
  VertexId id = next_vertex_++;
  for (auto& per_color : adj_) {
    if (per_color.size() <= id) per_color.resize(id + 1);
  }
  return id;
}

void ColoredGraph::add_edge(VertexId u, VertexId v, Color c) {
  if (u == v) {
    throw SelfLoopError("self-loop at vertex " + std::to_string(u));
  }
  const auto key = edge_key(u, v);
  if (edges_.count(key)) {
    throw DuplicateEdgeError("edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") already colored");
  }
  touch(u);
  touch(v);
  edges_.emplace(key, c);
  adj_[static_cast<int>(c)][u].push_back(v);
  adj_[static_cast<int>(c)][v].push_back(u);
  (c == Color::kRed ? n_red_ : n_blue_) += 1;
}

bool ColoredGraph::has_edge(VertexId u, VertexId v) const {
  return edges_.count(edge_key(u, v)) > 0;
}

std::optional<Color> ColoredGraph::edge_color(VertexId u, VertexId v) const {
  auto it = edges_.find(edge_key(u, v));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::size_t ColoredGraph::degree(VertexId v) const {
  return degree(v, Color::kRed) + degree(v, Color::kBlue);
}

std::size_t ColoredGraph::degree(VertexId v, Color c) const {
  const auto& a = adj_[static_cast<int>(c)];
  return v < a.size() ? a[v].size() : 0;
}

const std::vector<VertexId>& ColoredGraph::neighbors(VertexId v, Color c) const {
  const auto& a = adj_[static_cast<int>(c)];
  return v < a.size() ? a[v] : kNoNeighbors;
}

std::vector<ColoredEdge> ColoredGraph::edges_sorted() const {
  std::vector<ColoredEdge> out;
  out.reserve(edges_.size());
  for (const auto& [key, color] : edges_) {
    out.push_back({static_cast<VertexId>(key >> 32),
                   static_cast<VertexId>(key & 0xffffffffu), color});
  }
  std::sort(out.begin(), out.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return out;
}

std::vector<VertexId> ColoredGraph::touched_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < next_vertex_; ++v) {
    if (degree(v) > 0) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> ColoredGraph::component_of(VertexId v, Color c) const {
  std::vector<VertexId> comp;
  std::unordered_set<VertexId> seen{v};
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    comp.push_back(x);
    for (VertexId w : neighbors(x, c)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return comp;
}

bool ColoredGraph::component_is_tree(const std::vector<VertexId>& comp, Color c) const {
  std::size_t deg_sum = 0;
  for (VertexId v : comp) deg_sum += degree(v, c);
  return deg_sum / 2 == comp.size() - 1;
}

int ColoredGraph::tree_depth_from(VertexId x, Color c,
                                  std::optional<VertexId> excluding) const {
  // Max vertex count of a path from x in a forest; simple paths in trees are
  // unique so plain DFS depth is exact.
  struct Frame {
    VertexId v;
    VertexId parent;
    int depth;
  };
  int best = 1;
  std::vector<Frame> stack{{x, x, 1}};
  while (!stack.empty()) {
    auto [v, parent, depth] = stack.back();
    stack.pop_back();
    best = std::max(best, depth);
    for (VertexId w : neighbors(v, c)) {
      if (w == parent || (excluding && w == *excluding)) continue;
      stack.push_back({w, v, depth + 1});
    }
  }
  return best;
}

int ColoredGraph::dfs_longest_from(VertexId x, Color c,
                                   std::optional<VertexId> excluding,
                                   std::size_t comp_size) const {
  if (comp_size > component_guard_) {
    throw ComponentGuardError("cyclic component of " + std::to_string(comp_size) +
                              " vertices exceeds search guard of " +
                              std::to_string(component_guard_));
  }
  std::unordered_set<VertexId> visited{x};
  if (excluding) visited.insert(*excluding);
  int best = 1;
  auto dfs = [&](auto&& self, VertexId v, int depth) -> void {
    best = std::max(best, depth);
    for (VertexId w : neighbors(v, c)) {
      if (visited.count(w)) continue;
      visited.insert(w);
      self(self, w, depth + 1);
      visited.erase(w);
    }
  };
  dfs(dfs, x, 1);
  return best;
}

int ColoredGraph::longest_path_from(VertexId x, Color c,
                                    std::optional<VertexId> excluding) const {
  if (degree(x, c) == 0) return 1;
  auto comp = component_of(x, c);
  if (component_is_tree(comp, c)) {
    return tree_depth_from(x, c, excluding);
  }
  return dfs_longest_from(x, c, excluding, comp.size());
}

int ColoredGraph::longest_red_path_from(VertexId x,
                                        std::optional<VertexId> excluding) const {
  return longest_path_from(x, Color::kRed, excluding);
}

int ColoredGraph::longest_red_path_through(VertexId u, VertexId v) const {
  const Color c = Color::kRed;
  auto comp_u = component_of(u, c);
  if (std::find(comp_u.begin(), comp_u.end(), v) == comp_u.end()) {
    // Disjoint red components: the halves cannot collide.
    return longest_path_from(u, c, std::nullopt) +
           longest_path_from(v, c, std::nullopt);
  }
  // u and v are red-connected, so red + uv is cyclic. Enumerate u-side paths
  // and extend each with the best disjoint v-side path.
  if (comp_u.size() > component_guard_) {
    throw ComponentGuardError("cyclic component of " + std::to_string(comp_u.size()) +
                              " vertices exceeds search guard of " +
                              std::to_string(component_guard_));
  }
  std::unordered_set<VertexId> visited{u, v};
  int best = 0;

  auto extend_v = [&](auto&& self, VertexId y, int depth) -> int {
    int local = depth;
    for (VertexId w : neighbors(y, c)) {
      if (visited.count(w)) continue;
      visited.insert(w);
      local = std::max(local, self(self, w, depth + 1));
      visited.erase(w);
    }
    return local;
  };
  auto extend_u = [&](auto&& self, VertexId y, int depth) -> void {
    best = std::max(best, depth + extend_v(extend_v, v, 1));
    for (VertexId w : neighbors(y, c)) {
      if (visited.count(w)) continue;
      visited.insert(w);
      self(self, w, depth + 1);
      visited.erase(w);
    }
  };
  extend_u(extend_u, u, 1);
  return best;
}

int ColoredGraph::longest_path_in_component(const std::vector<VertexId>& comp,
                                            Color c) const {
  if (component_is_tree(comp, c)) {
    // Double DFS gives the exact diameter of a tree.
    VertexId far = comp.front();
    int best = 0;
    // First sweep: farthest vertex from an arbitrary root.
    {
      struct Frame {
        VertexId v;
        VertexId parent;
        int depth;
      };
      std::vector<Frame> stack{{comp.front(), comp.front(), 1}};
      while (!stack.empty()) {
        auto [v, parent, depth] = stack.back();
        stack.pop_back();
        if (depth > best) {
          best = depth;
          far = v;
        }
        for (VertexId w : neighbors(v, c)) {
          if (w != parent) stack.push_back({w, v, depth + 1});
        }
      }
    }
    return tree_depth_from(far, c, std::nullopt);
  }
  int best = 0;
  for (VertexId v : comp) {
    best = std::max(best, dfs_longest_from(v, c, std::nullopt, comp.size()));
  }
  return best;
}

int ColoredGraph::longest_blue_path() const {
  if (edges_.empty()) return 0;
  int best = 1;
  std::unordered_set<VertexId> seen;
  for (VertexId v = 0; v < next_vertex_; ++v) {
    if (degree(v, Color::kBlue) == 0 || seen.count(v)) continue;
    auto comp = component_of(v, Color::kBlue);
    seen.insert(comp.begin(), comp.end());
    best = std::max(best, longest_path_in_component(comp, Color::kBlue));
  }
  return best;
}

int ColoredGraph::longest_red_path() const {
  if (n_red_ == 0) return edges_.empty() ? 0 : 1;
  int best = 1;
  std::unordered_set<VertexId> seen;
  for (VertexId v = 0; v < next_vertex_; ++v) {
    if (degree(v, Color::kRed) == 0 || seen.count(v)) continue;
    auto comp = component_of(v, Color::kRed);
    seen.insert(comp.begin(), comp.end());
    best = std::max(best, longest_path_in_component(comp, Color::kRed));
  }
  return best;
}

bool ColoredGraph::has_blue_path(int n) const {
  if (n <= 1) return n == 1 ? !edges_.empty() : true;
  std::unordered_set<VertexId> seen;
  for (VertexId v = 0; v < next_vertex_; ++v) {
    if (degree(v, Color::kBlue) == 0 || seen.count(v)) continue;
    auto comp = component_of(v, Color::kBlue);
    seen.insert(comp.begin(), comp.end());
    if (static_cast<int>(comp.size()) < n) continue;
    if (longest_path_in_component(comp, Color::kBlue) >= n) return true;
  }
  return false;
}

std::vector<BlueComponent> ColoredGraph::blue_components() const {
  std::vector<BlueComponent> out;
  std::unordered_set<VertexId> seen;
  for (VertexId v = 0; v < next_vertex_; ++v) {
    if (degree(v, Color::kBlue) == 0 || seen.count(v)) continue;
    auto comp = component_of(v, Color::kBlue);
    seen.insert(comp.begin(), comp.end());
    std::sort(comp.begin(), comp.end());

    BlueComponent bc;
    std::size_t max_deg = 0;
    std::vector<VertexId> leaves;
    for (VertexId x : comp) {
      const auto d = degree(x, Color::kBlue);
      max_deg = std::max(max_deg, d);
      if (d == 1) leaves.push_back(x);
    }
    bc.is_path = component_is_tree(comp, Color::kBlue) && max_deg <= 2;
    if (bc.is_path) {
      bc.endpoints = {leaves.front(), leaves.back()};
    }
    bc.vertices = std::move(comp);
    out.push_back(std::move(bc));
  }
  return out;
}

}  // namespace ramsey
