#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/board.hpp"

namespace ramsey {

// Certificate that a vertex sequence is a blue (l1,l2)-path: a blue path
// whose end i heads a red path of length >= l_i.
struct BluePathCert {
  std::vector<VertexId> vertices;
  int l1 = 0;
  int l2 = 0;
};

// Certificate for an extended (2,0)-path: a blue (2,0)-path u_1..u_k whose
// 2-end u_k (the transition vertex) carries the red edge u_k u_{k+1}.
struct ExtendedPathCert {
  VertexId blue_end = 0;
  VertexId transition = 0;
  VertexId red_end = 0;
  std::vector<VertexId> blue_vertices;  // u_1..u_k
};

// The 5-vertex limb: blue x1x2, x2x5, x3x4 and red x2x3.
struct LimbCert {
  VertexId x1 = 0, x2 = 0, x3 = 0, x4 = 0, x5 = 0;
};

template <typename Cert>
struct CertResult {
  std::optional<Cert> cert;
  std::string failure;  // empty on success

  explicit operator bool() const { return cert.has_value(); }
  const Cert& operator*() const { return *cert; }
  const Cert* operator->() const { return &*cert; }

  static CertResult ok(Cert c) { return {std::move(c), {}}; }
  static CertResult fail(std::string why) { return {std::nullopt, std::move(why)}; }
};

// Certifies that `vertices` is a blue (1,1)-path. A single vertex with at
// least one red edge is the degenerate case. The returned certificate is
// oriented with the smaller end id first.
CertResult<BluePathCert> certify_11_path(const ColoredGraph& g,
                                         std::vector<VertexId> vertices);

// Certifies that `vertices` (>= 3, last entry the red end) is an extended
// (2,0)-path.
CertResult<ExtendedPathCert> certify_extended20(const ColoredGraph& g,
                                                std::vector<VertexId> vertices);

// All components of g isomorphic to the limb, with its color pattern.
std::vector<LimbCert> find_limb(const ColoredGraph& g);

// Shared helper: consecutive vertices joined by blue edges, no repeats.
bool is_blue_path(const ColoredGraph& g, const std::vector<VertexId>& vertices);

}  // namespace ramsey
