#include "ocdc/constructors.hpp"

#include <algorithm>
#include <stdexcept>

#include "ocdc/compose.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/structure.hpp"
#include "oppdc_fixtures.hpp"

namespace ocdc {

namespace {

CoverCertificate checked(Graph g, std::vector<std::vector<Vertex>> lists, CoverKind kind, std::string provenance) {
  std::vector<DirectedCycle> cycles;
  for (auto& l : lists) cycles.emplace_back(std::move(l));
  CoverCertificate c = make_cycle_certificate(std::move(g), kind, std::move(cycles), std::move(provenance));
  require_valid(c);
  return c;
}

CoverKind kind_for(const Graph& g, std::size_t count) {
  return static_cast<int>(count) <= g.order() - 1 ? CoverKind::SOCDC : CoverKind::OCDC;
}

}  // namespace

CoverCertificate ocdc_k4() {
  return checked(complete_graph(4), {{0, 1, 3}, {1, 0, 2}, {2, 3, 1}, {3, 2, 0}}, CoverKind::OCDC, "ocdc_k4");
}

CoverCertificate ocdc_k6() {
  return checked(complete_graph(6),
                 {{0, 1, 2, 3, 4, 5}, {1, 5, 2, 4, 3}, {0, 4, 1, 3, 2}, {0, 3, 5, 1, 4}, {0, 5, 4, 2, 1}, {0, 2, 5, 3}},
                 CoverKind::OCDC, "ocdc_k6");
}

CoverCertificate socdc_complete_odd(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("socdc_complete_odd needs odd n >= 3");
  const int k = (n - 1) / 2;
  const int m = n - 1;  // Z_m plus the fixed vertex m
  std::vector<int> zigzag{0};
  for (int step = 1; static_cast<int>(zigzag.size()) < m; ++step) {
    zigzag.push_back(step);
    if (static_cast<int>(zigzag.size()) < m) zigzag.push_back(m - step);
  }
  std::vector<DirectedCycle> cycles;
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> h{m};
    for (int z : zigzag) h.push_back((z + i) % m);
    cycles.emplace_back(h);
  }
  const Graph g = complete_graph(n);
  CoverCertificate c = make_cycle_certificate(g, CoverKind::SOCDC, double_cycle_decomposition(g, cycles), "socdc_complete_odd");
  require_valid(c);
  return c;
}

std::optional<CoverCertificate> cached_complete_oppdc(int n) {
  for (const auto& f : detail::oppdc_fixtures()) {
    if (f.n != n) continue;
    std::vector<DirectedPath> paths;
    for (const auto& p : f.paths) paths.emplace_back(p);
    CoverCertificate c = make_path_certificate(complete_graph(n), CoverKind::OPPDC, std::move(paths), f.provenance);
    require_valid(c);
    return c;
  }
  return std::nullopt;
}

CoverCertificate socdc_complete_even(int n, const SearchOptions& opt) {
  if (n == 4 || n == 6) throw NoSocdcExists("K" + std::to_string(n) + " has no small oriented cycle double cover");
  if (n < 8 || n % 2 != 0) throw DomainError("socdc_complete_even needs even n >= 8");
  std::optional<CoverCertificate> p = cached_complete_oppdc(n - 1);
  if (!p) {
    SearchOutcome s = find_oppdc_sequential(complete_graph(n - 1), opt);
    if (s.status != SearchStatus::Found)
      throw Unresolved("no OPPDC of K" + std::to_string(n - 1) + " within the search budget (" + to_string(s.status) + ")");
    p = std::move(s.certificate);
  }
  CoverCertificate c = join_apex(*p);
  c.provenance = "socdc_complete_even(" + c.provenance + ")";
  return c;
}

CoverCertificate socdc_complete_bipartite(int n, int m) {
  if (n < 2 || m < n) throw DomainError("socdc_complete_bipartite needs 2 <= n <= m");
  std::vector<std::vector<Vertex>> lists;
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> c;
    for (int j = 0; j < n; ++j) {
      c.push_back(j);
      c.push_back(n + (i + j) % m);
    }
    lists.push_back(std::move(c));
  }
  return checked(complete_bipartite_graph(n, m), std::move(lists), CoverKind::SOCDC, "socdc_complete_bipartite");
}

PlanarCover socdc_planar(const Graph& g, const RotationSystem& rot) {
  if (!is_bridgeless(g)) throw DomainError("socdc_planar: graph has a bridge");
  const auto walks = faces(g, rot);
  const int euler = 2 + g.size() - g.order();
  if (static_cast<int>(walks.size()) != euler)
    throw NotPlanarEmbedding(std::to_string(walks.size()) + " faces, a planar embedding has " + std::to_string(euler));
  PlanarCover out{{}, g.size() >= 2 * g.order() - 2, false};
  std::vector<DirectedCycle> cycles;
  for (const auto& w : walks) {
    // Close the walk, peeling off a directed cycle whenever a vertex recurs.
    std::vector<Vertex> stack;
    std::vector<Vertex> seq = w;
    seq.push_back(w.front());
    for (Vertex x : seq) {
      auto it = std::find(stack.begin(), stack.end(), x);
      if (it == stack.end()) {
        stack.push_back(x);
        continue;
      }
      std::vector<Vertex> c(it, stack.end());
      if (c.size() < 3) throw CertificateInconsistency("face walk doubles back along an edge");
      stack.erase(it + 1, stack.end());
      cycles.emplace_back(std::move(c));
    }
  }
  out.split = static_cast<int>(cycles.size()) != euler;
  const std::size_t count = cycles.size();
  out.certificate = make_cycle_certificate(g, kind_for(g, count), std::move(cycles), "socdc_planar");
  require_valid(out.certificate);
  return out;
}

std::vector<DirectedCycle> two_factor_cdc(const Graph& g, const EdgeColoring3& c) {
  std::vector<DirectedCycle> out;
  const int n = g.order();
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.edges().size(); ++i)
      if (c.color[i] == a || c.color[i] == b) {
        const Edge& e = g.edges()[i];
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
      }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      const auto& ns = adj[static_cast<std::size_t>(s)];
      if (ns.size() != 2) throw PreconditionError("color classes are not perfect matchings");
      std::vector<Vertex> cyc{s};
      seen[static_cast<std::size_t>(s)] = 1;
      Vertex prev = s, cur = std::min(ns[0], ns[1]);
      while (cur != s) {
        cyc.push_back(cur);
        seen[static_cast<std::size_t>(cur)] = 1;
        const auto& nc = adj[static_cast<std::size_t>(cur)];
        const Vertex next = nc[0] == prev ? nc[1] : nc[0];
        prev = cur;
        cur = next;
      }
      if (cyc.size() % 2 != 0) throw std::logic_error("two alternating matchings produced an odd cycle");
      out.emplace_back(std::move(cyc));
    }
  }
  return out;
}

CubicCover ocdc_cubic_class1(const Graph& g, const std::optional<EdgeColoring3>& coloring, const SearchOptions& opt) {
  if (!g.is_regular(3)) throw DomainError("ocdc_cubic_class1: graph is not cubic");
  EdgeColoring3 col;
  if (coloring) {
    if (!is_proper_3_edge_coloring(g, *coloring)) throw PreconditionError("ocdc_cubic_class1: coloring is not proper");
    col = *coloring;
  } else {
    ColoringResult r = edge_color_cubic(g);
    if (r.verdict != ColoringVerdict::Colored) throw DomainError("ocdc_cubic_class1: no 3-edge-coloring found");
    col = *r.coloring;
  }
  const auto cdc = two_factor_cdc(g, col);
  OrientOutcome o = orient_cdc(g, cdc);
  CubicCover out;
  if (o.feasible) {
    const std::size_t count = o.cycles.size();
    out.certificate = make_cycle_certificate(g, kind_for(g, count), std::move(o.cycles), "ocdc_cubic_class1(2-factors)");
  } else {
    out.from_two_factors = false;
    out.witness = std::move(o.witness);
    SearchOutcome s = find_ocdc(g, std::nullopt, opt);
    if (s.status != SearchStatus::Found) throw Unresolved("2-factor CDC does not orient and search did not finish");
    out.certificate = std::move(*s.certificate);
    out.certificate.kind = kind_for(g, out.certificate.size());
    out.certificate.provenance = "ocdc_cubic_class1(search)";
  }
  require_valid(out.certificate);
  return out;
}

}  // namespace ocdc
