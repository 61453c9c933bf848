#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

using VertexId = std::uint32_t;

enum class Color : std::uint8_t { kRed = 0, kBlue = 1 };

inline Color other(Color c) { return c == Color::kRed ? Color::kBlue : Color::kRed; }
inline char color_letter(Color c) { return c == Color::kRed ? 'R' : 'B'; }

struct ColoredEdge {
  VertexId u;  // u < v
  VertexId v;
  Color color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

struct BlueComponent {
  std::vector<VertexId> vertices;  // sorted
  bool is_path = false;
  // Valid only when is_path; endpoints[0] <= endpoints[1]. A single blue
  // edge has both vertices as endpoints.
  std::array<VertexId, 2> endpoints{0, 0};
};

// Colored simple graph over a lazily allocated vertex universe. Vertex ids
// are never recycled and an id is free iff it was never an endpoint of a
// colored edge. Edge colors are immutable once set.
class ColoredGraph {
 public:
  static constexpr std::size_t kDefaultComponentGuard = 64;

  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t component_guard)
      : component_guard_(component_guard) {}

  // Returns an id that has never been touched by any edge. Strictly
  // increasing. Throws VertexBudgetError when a vertex budget is set and
  // exhausted.
  VertexId allocate_free_vertex();

  // Optional hard cap on the number of distinct ids; used by the solver to
  // truncate the infinite board soundly.
  void set_vertex_budget(std::optional<std::size_t> budget) { vertex_budget_ = budget; }

  void add_edge(VertexId u, VertexId v, Color c);

  bool has_edge(VertexId u, VertexId v) const;
  std::optional<Color> edge_color(VertexId u, VertexId v) const;

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t edge_count(Color c) const { return c == Color::kRed ? n_red_ : n_blue_; }

  // One past the largest id ever seen (allocated or used in an edge).
  VertexId vertex_watermark() const { return next_vertex_; }

  std::size_t degree(VertexId v) const;
  std::size_t degree(VertexId v, Color c) const;
  const std::vector<VertexId>& neighbors(VertexId v, Color c) const;

  // All edges with u < v, sorted by (u, v); canonical order for
  // serialization.
  std::vector<ColoredEdge> edges_sorted() const;

  // Vertices with degree >= 1, sorted.
  std::vector<VertexId> touched_vertices() const;

  // --- structural queries -------------------------------------------------

  // Vertex count of the longest simple path in red(g) + {uv} that traverses
  // uv. Exact; pre: uv uncolored and u != v.
  int longest_red_path_through(VertexId u, VertexId v) const;

  // Vertex count of the longest simple red path with end x, avoiding the
  // excluded vertex if given. 1 when x has red degree 0.
  int longest_red_path_from(VertexId x,
                            std::optional<VertexId> excluding = std::nullopt) const;

  // True iff the blue subgraph contains a simple path on n vertices. n == 1
  // is satisfied by any touched vertex.
  bool has_blue_path(int n) const;

  int longest_blue_path() const;
  int longest_red_path() const;

  std::vector<BlueComponent> blue_components() const;

 private:
  static std::uint64_t edge_key(VertexId u, VertexId v);
  void touch(VertexId v);

  std::vector<VertexId> component_of(VertexId v, Color c) const;
  bool component_is_tree(const std::vector<VertexId>& comp, Color c) const;
  int tree_depth_from(VertexId x, Color c, std::optional<VertexId> excluding) const;
  int dfs_longest_from(VertexId x, Color c, std::optional<VertexId> excluding,
                       std::size_t comp_size) const;
  int longest_path_from(VertexId x, Color c, std::optional<VertexId> excluding) const;
  int longest_path_in_component(const std::vector<VertexId>& comp, Color c) const;

  std::unordered_map<std::uint64_t, Color> edges_;
  std::array<std::vector<std::vector<VertexId>>, 2> adj_;
  VertexId next_vertex_ = 0;
  std::size_t n_red_ = 0;
  std::size_t n_blue_ = 0;
  std::size_t component_guard_ = kDefaultComponentGuard;
  std::optional<std::size_t> vertex_budget_;
};

}  // namespace ramsey
