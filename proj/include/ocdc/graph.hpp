#ifndef OCDC_GRAPH_HPP
#define OCDC_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ocdc {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// One direction of an edge in the symmetric orientation.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Arc reversed() const { return {head, tail}; }
  auto operator<=>(const Arc&) const = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable once built. Edges are kept sorted lexicographically and each
/// edge e = {u < v} owns the two arcs 2e (u->v) and 2e+1 (v->u), so arc ids
/// are dense in 0..2|E|-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws ValidationError on loops, duplicates or out-of-range endpoints.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  int arc_count() const noexcept { return 2 * size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int min_degree() const;
  int max_degree() const;

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool has_edge(Vertex u, Vertex v) const noexcept { return edge_index(u, v) >= 0; }
  /// Index into edges(), or -1.
  int edge_index(Vertex u, Vertex v) const noexcept;
  /// Dense arc id, or -1 when {tail, head} is not an edge.
  int arc_index(Arc a) const noexcept;
  Arc arc(int id) const;

  bool is_complete() const noexcept { return size() == n_ * (n_ - 1) / 2; }
  bool is_regular(int d) const;

  /// Subgraph induced by `vertices` (in the given order; new id = position).
  Graph induced(std::span<const Vertex> vertices) const;
  Graph without_edge(Edge e) const;
  /// Remove a vertex; remaining vertices are renumbered densely in order.
  Graph without_vertex(Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void build(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::int32_t> edge_id_;  // n*n matrix, -1 off the edge set
};

std::string to_string(const Edge& e);
std::string to_string(const Arc& a);

}  // namespace ocdc

#endif  // OCDC_GRAPH_HPP
