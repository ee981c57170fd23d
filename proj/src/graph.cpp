#include "ocdc/graph.hpp"

#include <algorithm>

#include "ocdc/error.hpp"

namespace ocdc {

Graph::Graph(int order) {
  if (order < 0) throw ValidationError("negative vertex count");
  n_ = order;
  build({});
}

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 0) throw ValidationError("negative vertex count");
  n_ = order;
  build({edges.begin(), edges.end()});
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::build(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_) throw ValidationError("edge " + to_string(e) + " out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw ValidationError("duplicate edge " + to_string(*dup));
  edges_ = std::move(edges);

  const auto n = static_cast<std::size_t>(n_);
  adj_.assign(n, {});
  edge_id_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    edge_id_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<std::int32_t>(i);
    edge_id_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<std::int32_t>(i);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_index(Vertex u, Vertex v) const noexcept {
  if (!has_vertex(u) || !has_vertex(v)) return -1;
  return edge_id_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
}

int Graph::arc_index(Arc a) const noexcept {
  const int e = edge_index(a.tail, a.head);
  if (e < 0) return -1;
  return 2 * e + (a.tail > a.head ? 1 : 0);
}

Arc Graph::arc(int id) const {
  const Edge& e = edges_.at(static_cast<std::size_t>(id / 2));
  return (id % 2 == 0) ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

bool Graph::is_regular(int d) const {
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    const int a = pos[static_cast<std::size_t>(e.u)];
    const int b = pos[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) out.emplace_back(a, b);
  }
  return Graph(static_cast<int>(vertices.size()), out);
}

Graph Graph::without_edge(Edge e) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& f : edges_)
    if (f != e) out.push_back(f);
  return Graph(n_, out);
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < n_; ++x)
    if (x != v) keep.push_back(x);
  return induced(keep);
}

std::string to_string(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }
std::string to_string(const Arc& a) { return std::to_string(a.tail) + "->" + std::to_string(a.head); }

}  // namespace ocdc
