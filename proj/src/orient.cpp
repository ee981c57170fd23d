#include "ocdc/orient.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

#include "ocdc/error.hpp"
#include "ocdc/structure.hpp"

namespace ocdc {

namespace {

void require_cdc(const Graph& g, const std::vector<DirectedCycle>& cdc) {
  const VerifyReport r = verify_cdc(g, cdc);
  if (!r.ok) {
    const Violation& v = r.violations.front();
    throw PreconditionError("input is not a CDC: " + to_string(v.what) + " " + v.subject + " (observed " +
                            std::to_string(v.observed) + ", expected " + std::to_string(v.expected) + ")");
  }
}

class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Root of x and parity of x relative to it.
  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent_[static_cast<std::size_t>(r)] != r) {
      p ^= parity_[static_cast<std::size_t>(r)];
      r = parent_[static_cast<std::size_t>(r)];
    }
    // compress
    int cur = x;
    int cur_p = p;
    while (parent_[static_cast<std::size_t>(cur)] != cur) {
      const int next = parent_[static_cast<std::size_t>(cur)];
      const int next_p = cur_p ^ parity_[static_cast<std::size_t>(cur)];
      parent_[static_cast<std::size_t>(cur)] = r;
      parity_[static_cast<std::size_t>(cur)] = cur_p;
      cur = next;
      cur_p = next_p;
    }
    return {r, p};
  }

  // false on contradiction
  bool unite(int a, int b, int parity, bool& merged) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    merged = false;
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[static_cast<std::size_t>(ra)] = rb;
    parity_[static_cast<std::size_t>(ra)] = pa ^ pb ^ parity;
    merged = true;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

struct Link {
  int to;
  Edge edge;
  int parity;
};

}  // namespace

OrientOutcome orient_cdc(const Graph& g, const std::vector<DirectedCycle>& cdc) {
  require_cdc(g, cdc);
  const int k = static_cast<int>(cdc.size());

  // For each edge the (cycle, forward?) pairs that contain it.
  std::vector<std::vector<std::pair<int, int>>> holders(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < k; ++i)
    for (const Arc& a : cdc[static_cast<std::size_t>(i)].arcs())
      holders[static_cast<std::size_t>(g.edge_index(a.tail, a.head))].push_back({i, a.tail < a.head ? 1 : 0});

  ParityUnionFind uf(k);
  std::vector<std::vector<Link>> forest(static_cast<std::size_t>(k));
  OrientOutcome out;
  for (int e = 0; e < g.size(); ++e) {
    const auto& h = holders[static_cast<std::size_t>(e)];
    const int i = h[0].first;
    const int j = h[1].first;
    const int b = (h[0].second == h[1].second) ? 1 : 0;
    const Edge edge = g.edges()[static_cast<std::size_t>(e)];
    bool merged = false;
    if (uf.unite(i, j, b, merged)) {
      if (merged) {
        forest[static_cast<std::size_t>(i)].push_back({j, edge, b});
        forest[static_cast<std::size_t>(j)].push_back({i, edge, b});
      }
      continue;
    }
    // Contradiction: close the forest path j ~> i with the edge i -- j.
    std::vector<int> prev(static_cast<std::size_t>(k), -1);
    std::vector<Link> via(static_cast<std::size_t>(k));
    std::queue<int> q;
    q.push(j);
    prev[static_cast<std::size_t>(j)] = j;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      if (x == i) break;
      for (const Link& l : forest[static_cast<std::size_t>(x)]) {
        if (prev[static_cast<std::size_t>(l.to)] >= 0) continue;
        prev[static_cast<std::size_t>(l.to)] = x;
        via[static_cast<std::size_t>(l.to)] = {x, l.edge, l.parity};
        q.push(l.to);
      }
    }
    // walk back from i to j, producing steps i -> ... -> j, then j -> i
    std::vector<ParityStep> chain;
    for (int x = i; x != j; x = prev[static_cast<std::size_t>(x)]) {
      const Link& l = via[static_cast<std::size_t>(x)];
      chain.push_back({x, l.edge, l.parity});
    }
    chain.push_back({j, edge, b});
    out.feasible = false;
    out.witness = std::move(chain);
    return out;
  }

  out.feasible = true;
  out.flips.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int flip = uf.find(i).second;
    out.flips[static_cast<std::size_t>(i)] = flip;
    out.cycles.push_back(flip ? cdc[static_cast<std::size_t>(i)].reversed() : cdc[static_cast<std::size_t>(i)]);
  }
  return out;
}

int witness_parity(const std::vector<ParityStep>& witness) {
  int p = 0;
  for (const ParityStep& s : witness) p ^= s.parity;
  return p;
}

std::vector<DirectedCycle> double_cycle_decomposition(const Graph& g, const std::vector<DirectedCycle>& decomposition) {
  std::vector<int> use(static_cast<std::size_t>(g.size()), 0);
  for (const DirectedCycle& c : decomposition)
    for (const Arc& a : c.arcs()) {
      const int e = g.edge_index(a.tail, a.head);
      if (e < 0) throw PreconditionError("decomposition uses non-edge " + to_string(a));
      ++use[static_cast<std::size_t>(e)];
    }
  for (int e = 0; e < g.size(); ++e)
    if (use[static_cast<std::size_t>(e)] != 1)
      throw PreconditionError("decomposition covers edge " + to_string(g.edges()[static_cast<std::size_t>(e)]) + " " +
                              std::to_string(use[static_cast<std::size_t>(e)]) + " times");
  std::vector<DirectedCycle> out;
  for (const DirectedCycle& c : decomposition) {
    out.push_back(c);
    out.push_back(c.reversed());
  }
  return out;
}

bool small_by_girth(const Graph& g, const std::vector<DirectedCycle>& ocdc) {
  if (!verify_ocdc(g, ocdc).ok) throw PreconditionError("small_by_girth needs a valid OCDC");
  const GirthAndDegree gd = girth_and_average_degree(g);
  const bool holds = gd.girth.has_value() && Rational(*gd.girth, 1) > gd.average_degree;
  // g |C| <= sum |C_i| = 2|E| = n * avg < n * g  =>  |C| < n
  if (holds && static_cast<int>(ocdc.size()) > g.order() - 1)
    throw std::logic_error("girth bound holds but the OCDC has more than n - 1 cycles");
  return holds;
}

bool cubic_bound_check(const Graph& g, const std::vector<DirectedCycle>& cdc) {
  if (g.order() == 0 || !g.is_regular(3)) throw DomainError("cubic_bound_check needs a cubic graph");
  require_cdc(g, cdc);
  return static_cast<long>(cdc.size()) * 2 <= static_cast<long>(g.order()) + 4;
}

}  // namespace ocdc
