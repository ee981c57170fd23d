#ifndef OCDC_EMBEDDING_HPP
#define OCDC_EMBEDDING_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "ocdc/graph.hpp"

namespace ocdc {

/// Cyclic order of neighbors around each vertex (combinatorial embedding).
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotation) : rotation_(std::move(rotation)) {}

  const std::vector<Vertex>& around(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  /// Neighbor following `from` in the cyclic order at `v`.
  Vertex successor(Vertex v, Vertex from) const;

  /// Throws ValidationError unless every rotation permutes the neighbor set.
  void validate(const Graph& g) const;

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

/// Rotation of a straight-line drawing: neighbors by counter-clockwise angle.
RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy);

/// Closed face walks. Arc (u,v) is followed by (v,w) with w the successor of
/// u around v; each walk begins at its smallest unvisited arc id and lists the
/// vertices without repeating the first. Every arc lies on exactly one walk.
std::vector<std::vector<Vertex>> faces(const Graph& g, const RotationSystem& rot);

struct PlanarFixture {
  Graph graph;
  RotationSystem rotation;
};

/// Shipped planar embeddings: "cube", "k4", "cycle:n", "wheel:n", "prism:n".
/// Graphs use the numbering of the matching generator (hypercube:3, ...).
PlanarFixture planar_fixture(std::string_view name);

}  // namespace ocdc

#endif  // OCDC_EMBEDDING_HPP
