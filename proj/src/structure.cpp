#include "ocdc/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "ocdc/error.hpp"

namespace ocdc {

Rational::Rational(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  if (d < 0) n = -n, d = -d;
  const long g = std::gcd(n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

// Components of g with a set of removed vertices and edges.
int count_components(const Graph& g, const std::vector<char>& dead_vertex, const std::function<bool(int)>& dead_edge,
                     std::vector<int>* comp_out = nullptr) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (dead_vertex[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (dead_vertex[static_cast<std::size_t>(w)] || comp[static_cast<std::size_t>(w)] >= 0) continue;
        if (dead_edge(g.edge_index(u, w))) continue;
        comp[static_cast<std::size_t>(w)] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  if (comp_out) *comp_out = std::move(comp);
  return count;
}

bool no_dead_edge(int) { return false; }

}  // namespace

std::vector<int> components(const Graph& g, int* count) {
  std::vector<int> comp;
  const int c = count_components(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0), no_dead_edge, &comp);
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int c = 0;
  components(g, &c);
  return c <= 1;
}

namespace {

struct LowLink {
  const Graph& g;
  std::vector<int> pre, low;
  int clock = 0;
  std::vector<Edge> bridges;
  std::vector<char> is_cut;
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> bicomponents;

  explicit LowLink(const Graph& graph)
      : g(graph),
        pre(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        is_cut(static_cast<std::size_t>(graph.order()), 0) {
    for (Vertex s = 0; s < g.order(); ++s)
      if (pre[static_cast<std::size_t>(s)] < 0) dfs(s, -1);
  }

  void dfs(Vertex u, Vertex parent) {
    auto U = static_cast<std::size_t>(u);
    pre[U] = low[U] = clock++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      auto W = static_cast<std::size_t>(w);
      if (pre[W] < 0) {
        ++children;
        edge_stack.emplace_back(u, w);
        dfs(w, u);
        low[U] = std::min(low[U], low[W]);
        if (low[W] > pre[U]) bridges.emplace_back(u, w);
        if (low[W] >= pre[U]) {
          if (parent >= 0) is_cut[U] = 1;
          std::vector<Edge> comp;
          const Edge top(u, w);
          while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == top) break;
          }
          bicomponents.push_back(std::move(comp));
        }
      } else if (w != parent && pre[W] < pre[U]) {
        edge_stack.emplace_back(u, w);
        low[U] = std::min(low[U], pre[W]);
      }
    }
    if (parent < 0 && children > 1) is_cut[U] = 1;
  }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  auto b = LowLink(g).bridges;
  std::sort(b.begin(), b.end());
  return b;
}

bool is_bridgeless(const Graph& g) { return bridges(g).empty(); }

std::vector<Vertex> cut_vertices(const Graph& g) {
  LowLink ll(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (ll.is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::optional<std::vector<Vertex>> vertex_connectivity_at_most(const Graph& g, int k) {
  if (k < 0 || k > 3) throw DomainError("vertex_connectivity_at_most supports k <= 3");
  if (!is_connected(g)) throw DomainError("vertex_connectivity_at_most needs a connected graph");
  const int n = g.order();
  for (int size = 1; size <= k && size <= n - 2; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<char> dead(static_cast<std::size_t>(n), 0);
      for (int v : pick) dead[static_cast<std::size_t>(v)] = 1;
      if (count_components(g, dead, no_dead_edge) > 1) return pick;
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

bool is_k_connected(const Graph& g, int k) {
  if (g.order() <= k || !is_connected(g)) return false;
  return k <= 1 || !vertex_connectivity_at_most(g, k - 1).has_value();
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw DomainError("is_k_edge_connected supports 1 <= k <= 3");
  const std::vector<char> alive(static_cast<std::size_t>(g.order()), 0);
  if (count_components(g, alive, no_dead_edge) > 1) return false;
  const int m = g.size();
  if (k >= 2 && !is_bridgeless(g)) return false;
  if (k == 3) {
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (count_components(g, alive, [&](int e) { return e == a || e == b; }) > 1) return false;
  }
  return true;
}

std::vector<EdgeCut> nontrivial_3_edge_cuts(const Graph& g) {
  std::vector<EdgeCut> out;
  const int m = g.size();
  const std::vector<char> alive(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> comp;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        auto dead = [&](int e) { return e == a || e == b || e == c; };
        if (count_components(g, alive, dead, &comp) != 2) continue;
        bool crossing = true;
        for (int e : {a, b, c}) {
          const Edge& f = g.edges()[static_cast<std::size_t>(e)];
          if (comp[static_cast<std::size_t>(f.u)] == comp[static_cast<std::size_t>(f.v)]) crossing = false;
        }
        if (!crossing) continue;
        EdgeCut cut;
        for (int e : {a, b, c}) cut.edges.push_back(g.edges()[static_cast<std::size_t>(e)]);
        for (Vertex v = 0; v < g.order(); ++v) (comp[static_cast<std::size_t>(v)] == 0 ? cut.side_a : cut.side_b).push_back(v);
        if (cut.nontrivial()) out.push_back(std::move(cut));
      }
  return out;
}

BlockDecomposition blocks(const Graph& g) {
  LowLink ll(g);
  BlockDecomposition out;
  for (const auto& comp : ll.bicomponents) {
    std::vector<Vertex> vs;
    for (const Edge& e : comp) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out.blocks.push_back({g.induced(vs), vs});
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (Vertex v = 0; v < g.order(); ++v)
    if (ll.is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
  return out;
}

GirthAndDegree girth_and_average_degree(const Graph& g) {
  GirthAndDegree out;
  out.average_degree = g.order() == 0 ? Rational() : Rational(2L * g.size(), g.order());
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        auto W = static_cast<std::size_t>(w);
        if (dist[W] < 0) {
          dist[W] = dist[static_cast<std::size_t>(u)] + 1;
          parent[W] = u;
          q.push(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[W] + 1;
          if (!out.girth || len < *out.girth) out.girth = len;
        }
      }
    }
  }
  return out;
}

}  // namespace ocdc
