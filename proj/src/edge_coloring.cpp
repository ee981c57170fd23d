#include <array>

#include "ocdc/constructors.hpp"
#include "ocdc/error.hpp"

namespace ocdc {

namespace {

class Coloring {
 public:
  explicit Coloring(const Graph& g) : g_(g), color_(static_cast<std::size_t>(g.size()), -1) {}

  int at(Vertex v, int c) const {  // edge index of color c at v, or -1
    for (Vertex w : g_.neighbors(v)) {
      const int e = g_.edge_index(v, w);
      if (color_[static_cast<std::size_t>(e)] == c) return e;
    }
    return -1;
  }
  bool free(Vertex v, int c) const { return at(v, c) < 0; }

  // Swap colors a and b along the alternating chain leaving v by color a.
  // Returns the far end of the chain.
  Vertex swap_chain(Vertex v, int a, int b) {
    std::vector<int> chain;
    Vertex cur = v;
    int want = a;
    while (true) {
      const int e = at(cur, want);
      if (e < 0 || (!chain.empty() && e == chain.back())) break;
      chain.push_back(e);
      const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
      cur = ed.u == cur ? ed.v : ed.u;
      want = want == a ? b : a;
      if (cur == v) break;
    }
    for (int e : chain) color_[static_cast<std::size_t>(e)] = color_[static_cast<std::size_t>(e)] == a ? b : a;
    return cur;
  }

  // Greedy pass with one Kempe swap per stuck edge; false if some edge stays
  // uncolored.
  bool greedy() {
    for (int e = 0; e < g_.size(); ++e) {
      const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
      if (try_direct(e, ed)) continue;
      if (!try_kempe(e, ed)) return false;
    }
    return true;
  }

  bool try_direct(int e, const Edge& ed) {
    for (int c = 0; c < 3; ++c)
      if (free(ed.u, c) && free(ed.v, c)) {
        color_[static_cast<std::size_t>(e)] = c;
        return true;
      }
    return false;
  }

  bool try_kempe(int e, const Edge& ed) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b || !free(ed.u, a) || !free(ed.v, b)) continue;
        // v holds a; flip the a/b chain from v so a frees up at v
        const std::vector<int> saved = color_;
        swap_chain(ed.v, a, b);
        if (try_direct(e, ed)) return true;
        color_ = saved;
      }
    return false;
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  const Graph& g_;
  std::vector<int> color_;
};

class Backtrack {
 public:
  Backtrack(const Graph& g, std::uint64_t limit) : g_(g), limit_(limit), color_(static_cast<std::size_t>(g.size()), -1) {
    // BFS edge order from vertex 0 keeps each new edge next to colored ones
    std::vector<char> seen_edge(static_cast<std::size_t>(g.size()), 0), seen_v(static_cast<std::size_t>(g.order()), 0);
    for (Vertex root = 0; root < g.order(); ++root) {
      if (seen_v[static_cast<std::size_t>(root)]) continue;
      std::vector<Vertex> queue{root};
      seen_v[static_cast<std::size_t>(root)] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const Vertex v = queue[i];
        for (Vertex w : g.neighbors(v)) {
          const int e = g.edge_index(v, w);
          if (!seen_edge[static_cast<std::size_t>(e)]) {
            seen_edge[static_cast<std::size_t>(e)] = 1;
            order_.push_back(e);
          }
          if (!seen_v[static_cast<std::size_t>(w)]) {
            seen_v[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
          }
        }
      }
    }
  }

  bool run() { return place(0, -1); }
  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& colors() const { return color_; }

 private:
  bool clash(Vertex v, int c, int self) const {
    for (Vertex w : g_.neighbors(v)) {
      const int e = g_.edge_index(v, w);
      if (e != self && color_[static_cast<std::size_t>(e)] == c) return true;
    }
    return false;
  }

  bool place(std::size_t i, int top) {
    if (++nodes_ > limit_) {
      stopped_ = true;
      return false;
    }
    if (i == order_.size()) return true;
    const int e = order_[i];
    const Edge& ed = g_.edges()[static_cast<std::size_t>(e)];
    // colors are interchangeable: never open more than one new color
    for (int c = 0; c <= std::min(2, top + 1); ++c) {
      if (clash(ed.u, c, e) || clash(ed.v, c, e)) continue;
      color_[static_cast<std::size_t>(e)] = c;
      if (place(i + 1, std::max(top, c))) return true;
      color_[static_cast<std::size_t>(e)] = -1;
      if (stopped_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t limit_;
  std::vector<int> color_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

bool is_proper_3_edge_coloring(const Graph& g, const EdgeColoring3& c) {
  if (static_cast<int>(c.color.size()) != g.size()) return false;
  for (int x : c.color)
    if (x < 0 || x > 2) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::array<int, 3> seen{};
    for (Vertex w : g.neighbors(v))
      if (++seen[static_cast<std::size_t>(c.color[static_cast<std::size_t>(g.edge_index(v, w))])] > 1) return false;
  }
  return true;
}

ColoringResult edge_color_cubic(const Graph& g, std::uint64_t node_limit) {
  if (!g.is_regular(3)) throw DomainError("edge_color_cubic: graph is not cubic");
  ColoringResult out;
  Coloring greedy(g);
  if (greedy.greedy()) {
    out.verdict = ColoringVerdict::Colored;
    out.coloring = EdgeColoring3{greedy.colors()};
    return out;
  }
  Backtrack bt(g, node_limit);
  const bool found = bt.run();
  out.nodes = bt.nodes();
  if (found) {
    out.verdict = ColoringVerdict::Colored;
    out.coloring = EdgeColoring3{bt.colors()};
  } else if (!bt.stopped() && g.order() <= 20) {
    out.verdict = ColoringVerdict::Class2;
  }
  return out;
}

}  // namespace ocdc
