#include "ocdc/compose.hpp"

#include <algorithm>
#include <set>

#include "ocdc/error.hpp"
#include "ocdc/families.hpp"

namespace ocdc {

namespace {

using VertexList = std::vector<Vertex>;

const std::vector<DirectedCycle>& verified_cycles(const CoverCertificate& c, const char* role) {
  if (!uses_cycles(c.kind)) throw PreconditionError(std::string(role) + " must be a cycle cover");
  const VerifyReport r = verify_ocdc(c.host, c.cycles());
  if (!r.ok) throw PreconditionError(std::string(role) + " is not an OCDC of its host");
  return c.cycles();
}

const std::vector<DirectedPath>& verified_paths(const CoverCertificate& p, const char* role) {
  if (uses_cycles(p.kind)) throw PreconditionError(std::string(role) + " must be a path cover");
  if (!verify_oppdc(p.host, p.paths()).ok) throw PreconditionError(std::string(role) + " is not an OPPDC of its host");
  return p.paths();
}

CoverCertificate finish(Graph host, std::vector<DirectedCycle> cycles, std::string provenance) {
  const CoverKind kind = static_cast<int>(cycles.size()) <= host.order() - 1 ? CoverKind::SOCDC : CoverKind::OCDC;
  CoverCertificate out = make_cycle_certificate(std::move(host), kind, std::move(cycles), std::move(provenance));
  require_valid(out);
  return out;
}

VertexList relabel(const VertexList& vs, const VertexList& map) {
  VertexList out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(map.at(static_cast<std::size_t>(v)));
  return out;
}

void check_map(const Graph& piece, const VertexList& map, const char* role) {
  if (static_cast<int>(map.size()) != piece.order())
    throw ValidationError(std::string(role) + " map size does not match the piece order");
  VertexList img;
  for (Vertex v : map)
    if (v >= 0) img.push_back(v);
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) throw ValidationError(std::string(role) + " map is not injective");
}

std::set<Vertex> image(const VertexList& map) {
  std::set<Vertex> s;
  for (Vertex v : map)
    if (v >= 0) s.insert(v);
  return s;
}

// Whole graph from the images of the pieces' edges; ids must be dense.
Graph assemble(int order, const std::set<Edge>& edges) {
  return Graph(order, std::vector<Edge>(edges.begin(), edges.end()));
}

int dense_order(const std::set<Vertex>& all) {
  const int n = static_cast<int>(all.size());
  if (n > 0 && (*all.begin() != 0 || *all.rbegin() != n - 1))
    throw ValidationError("merge spec images must cover 0..n-1 exactly");
  return n;
}

void add_mapped_edges(const Graph& piece, const VertexList& map, std::set<Edge>& out) {
  for (const Edge& e : piece.edges()) {
    const Vertex a = map[static_cast<std::size_t>(e.u)];
    const Vertex b = map[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) out.insert(Edge(a, b));
  }
}

std::size_t unique_cycle_with(const std::vector<VertexList>& cycles, Arc a) {
  std::size_t found = cycles.size();
  int hits = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] == a.tail && c[(k + 1) % c.size()] == a.head) {
        found = i;
        ++hits;
      }
  }
  if (hits != 1) throw CertificateInconsistency("arc " + to_string(a) + " lies on " + std::to_string(hits) + " cycles, expected 1");
  return found;
}

// Cycle minus arc tail->head, as the path head ... tail.
VertexList open_at_arc(const VertexList& cycle, Arc a) {
  auto it = std::find(cycle.begin(), cycle.end(), a.head);
  VertexList out(it, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  if (out.back() != a.tail) throw CertificateInconsistency("cycle does not contain arc " + to_string(a));
  return out;
}

// Cycle through w minus w, as the path succ(w) ... pred(w).
VertexList open_at_vertex(const VertexList& cycle, Vertex w) {
  auto it = std::find(cycle.begin(), cycle.end(), w);
  VertexList out(it + 1, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

VertexList concat(VertexList a, const VertexList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Replace arc a.tail -> a.head of `cycle` by the path `via` (a.tail ... a.head).
VertexList reroute(const VertexList& cycle, Arc a, const VertexList& via) {
  VertexList p = open_at_arc(cycle, a);  // head ... tail
  p.insert(p.end(), via.begin() + 1, via.end() - 1);
  return p;
}

std::vector<VertexList> mapped_cycles(const std::vector<DirectedCycle>& cycles, const VertexList& map) {
  std::vector<VertexList> out;
  for (const auto& c : cycles) out.push_back(relabel(c.vertices(), map));
  return out;
}

std::vector<DirectedCycle> to_cycles(const std::vector<VertexList>& lists) {
  std::vector<DirectedCycle> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

void erase_indices(std::vector<VertexList>& v, std::vector<std::size_t> idx) {
  std::sort(idx.rbegin(), idx.rend());
  for (std::size_t i : idx) v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
}

}  // namespace

CoverCertificate merge_at_cutvertex(const CoverCertificate& c1, const CoverCertificate& c2, const MergeSpec& spec) {
  const auto& k1 = verified_cycles(c1, "first piece");
  const auto& k2 = verified_cycles(c2, "second piece");
  check_map(c1.host, spec.map1, "first");
  check_map(c2.host, spec.map2, "second");
  const auto i1 = image(spec.map1);
  const auto i2 = image(spec.map2);
  std::vector<Vertex> shared;
  std::set_intersection(i1.begin(), i1.end(), i2.begin(), i2.end(), std::back_inserter(shared));
  if (shared.size() != 1 || i1.size() != spec.map1.size() || i2.size() != spec.map2.size())
    throw ValidationError("cut-vertex merge needs pieces sharing exactly one vertex");
  std::set<Vertex> all = i1;
  all.insert(i2.begin(), i2.end());
  std::set<Edge> edges;
  add_mapped_edges(c1.host, spec.map1, edges);
  add_mapped_edges(c2.host, spec.map2, edges);
  std::vector<VertexList> out = mapped_cycles(k1, spec.map1);
  for (auto& c : mapped_cycles(k2, spec.map2)) out.push_back(std::move(c));
  return finish(assemble(dense_order(all), edges), to_cycles(out), "merge_at_cutvertex(" + c1.provenance + "; " + c2.provenance + ")");
}

CoverCertificate subdivide(const CoverCertificate& c, Edge uv) {
  const auto& cycles = verified_cycles(c, "cover");
  if (!c.host.has_edge(uv.u, uv.v)) throw DomainError("subdivide: " + to_string(uv) + " is not an edge");
  const Vertex x = c.host.order();
  std::vector<Edge> edges;
  for (const Edge& e : c.host.edges())
    if (e != uv) edges.push_back(e);
  edges.emplace_back(uv.u, x);
  edges.emplace_back(x, uv.v);
  std::vector<VertexList> out;
  for (const auto& cyc : cycles) {
    VertexList l = cyc.vertices();
    for (Arc a : {Arc{uv.u, uv.v}, Arc{uv.v, uv.u}})
      if (cyc.contains(a)) l = reroute(l, a, {a.tail, x, a.head});
    out.push_back(std::move(l));
  }
  return finish(Graph(x + 1, edges), to_cycles(out), "subdivide(" + c.provenance + ", " + to_string(uv) + ")");
}

CoverCertificate merge_2cut(const CoverCertificate& c1, const CoverCertificate& c2, const MergeSpec& spec, Vertex v1,
                            Vertex v2, TwoCutMode mode) {
  const auto& k1 = verified_cycles(c1, "first piece");
  const auto& k2 = verified_cycles(c2, "second piece");
  check_map(c1.host, spec.map1, "first");
  check_map(c2.host, spec.map2, "second");
  const auto i1 = image(spec.map1);
  const auto i2 = image(spec.map2);
  std::vector<Vertex> shared;
  std::set_intersection(i1.begin(), i1.end(), i2.begin(), i2.end(), std::back_inserter(shared));
  if (shared != std::vector<Vertex>{std::min(v1, v2), std::max(v1, v2)} || i1.size() != spec.map1.size() || i2.size() != spec.map2.size())
    throw ValidationError("2-cut merge needs pieces meeting exactly in {v1, v2}");
  std::set<Edge> e1, e2;
  add_mapped_edges(c1.host, spec.map1, e1);
  add_mapped_edges(c2.host, spec.map2, e2);
  if (!e1.contains(Edge(v1, v2)) || !e2.contains(Edge(v1, v2))) throw ValidationError("both pieces must contain the edge v1v2");
  std::set<Edge> edges = e1;
  edges.insert(e2.begin(), e2.end());
  if (mode == TwoCutMode::NoEdge) edges.erase(Edge(v1, v2));
  std::set<Vertex> all = i1;
  all.insert(i2.begin(), i2.end());

  std::vector<VertexList> a = mapped_cycles(k1, spec.map1);
  std::vector<VertexList> b = mapped_cycles(k2, spec.map2);
  const Arc fwd{v1, v2};
  const Arc back{v2, v1};
  const std::size_t a1 = unique_cycle_with(a, fwd), a2 = unique_cycle_with(a, back);
  const std::size_t b1 = unique_cycle_with(b, fwd), b2 = unique_cycle_with(b, back);
  // (v2 .. v1 in piece 1) followed by (v1 .. v2 in piece 2), endpoints shared
  auto splice = [&](const VertexList& x, const VertexList& y) {
    VertexList p = open_at_arc(x, fwd);
    VertexList q = open_at_arc(y, back);
    p.insert(p.end(), q.begin() + 1, q.end() - 1);
    return p;
  };
  std::vector<VertexList> out;
  out.push_back(splice(a[a1], b[b2]));
  std::vector<std::size_t> drop_a{a1}, drop_b{b2};
  if (mode == TwoCutMode::NoEdge) {
    out.push_back(splice(b[b1], a[a2]));
    drop_a.push_back(a2);
    drop_b.push_back(b1);
  }
  erase_indices(a, drop_a);
  erase_indices(b, drop_b);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return finish(assemble(dense_order(all), edges), to_cycles(out),
                std::string("merge_2cut[") + (mode == TwoCutMode::SharedEdge ? "shared_edge" : "no_edge") + "](" + c1.provenance +
                    "; " + c2.provenance + ")");
}

namespace {

using Table = std::vector<VertexList>;  // 1-based paper-style labels

const Table kK4K4 = {{1, 4, 3, 2, 5, 6}, {1, 5, 2, 3}, {1, 3, 4, 2, 6, 5}, {1, 6, 2, 4}};
const Table kK4K6 = {{1, 6, 5, 7, 8, 2, 3}, {1, 3, 4, 2, 8},    {1, 7, 6, 8, 5, 2, 4},
                     {1, 5, 8, 7, 2, 6},    {1, 8, 6, 2, 7, 5}, {1, 4, 3, 2, 5, 6, 7}};
const Table kK6K6 = {{1, 6, 4, 5, 3, 2, 7, 9, 8, 10}, {1, 3, 5, 4, 6, 2, 10, 8, 9, 7}, {1, 4, 3, 6, 5, 2, 9, 10, 7, 8},
                     {1, 5, 6, 3, 4, 2, 8, 7, 10, 9}, {1, 8, 2, 4},                     {1, 10, 2, 6},
                     {1, 9, 2, 5},                    {1, 7, 2, 3}};

// Clique cycles kept as-is, then the two reroutes of the other piece's
// cycles through v1->v2 and v2->v1.
struct EdgeCase {
  Table cycles;
  VertexList forward_via;   // replaces v1 -> v2
  VertexList backward_via;  // replaces v2 -> v1
};

const EdgeCase kK4Edge = {{{1, 2, 4}, {1, 4, 3, 2}}, {1, 3, 4, 2}, {2, 3, 1}};
const EdgeCase kK6Edge = {{{1, 2, 4, 6, 3, 5}, {1, 3, 6, 2}, {1, 4, 2, 5, 6}, {1, 5, 2, 3, 4}}, {1, 6, 5, 4, 3, 2}, {2, 6, 4, 5, 3, 1}};

void add_clique(const VertexList& labels, std::size_t from, std::size_t to, std::set<Edge>& edges) {
  // clique on labels[0], labels[1] and labels[from..to)
  VertexList members{labels[0], labels[1]};
  for (std::size_t i = from; i < to; ++i) members.push_back(labels[i]);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) edges.insert(Edge(members[i], members[j]));
}

VertexList from_labels(const VertexList& paper, const VertexList& labels) {
  VertexList out;
  for (Vertex p : paper) out.push_back(labels.at(static_cast<std::size_t>(p - 1)));
  return out;
}

}  // namespace

CoverCertificate merge_2cut_special(SpecialTwoCut which, const std::vector<Vertex>& labels, const CoverCertificate* other,
                                    const std::vector<Vertex>* other_map) {
  std::set<Edge> edges;
  const Table* table = nullptr;
  std::size_t want = 0;
  switch (which) {
    case SpecialTwoCut::K4K4: table = &kK4K4, want = 6; break;
    case SpecialTwoCut::K4K6: table = &kK4K6, want = 8; break;
    case SpecialTwoCut::K6K6: table = &kK6K6, want = 10; break;
    case SpecialTwoCut::K4Edge: want = 4; break;
    case SpecialTwoCut::K6Edge: want = 6; break;
  }
  if (labels.size() != want) throw ValidationError("special 2-cut needs " + std::to_string(want) + " labels");
  const std::set<Vertex> label_set(labels.begin(), labels.end());
  if (label_set.size() != labels.size()) throw ValidationError("special 2-cut labels repeat a vertex");

  if (table) {
    const std::size_t split = (which == SpecialTwoCut::K6K6) ? 6 : 4;
    add_clique(labels, 2, split, edges);
    add_clique(labels, split, labels.size(), edges);
    edges.erase(Edge(labels[0], labels[1]));
    std::vector<VertexList> out;
    for (const auto& c : *table) out.push_back(from_labels(c, labels));
    const char* name = which == SpecialTwoCut::K4K4 ? "K4+K4" : which == SpecialTwoCut::K4K6 ? "K4+K6" : "K6+K6";
    return finish(assemble(dense_order(label_set), edges), to_cycles(out), std::string("merge_2cut_special[") + name + "]");
  }

  if (!other || !other_map) throw ValidationError("special 2-cut with a shared edge needs the other piece's cover");
  const auto& k2 = verified_cycles(*other, "other piece");
  check_map(other->host, *other_map, "other");
  const auto i2 = image(*other_map);
  std::vector<Vertex> shared;
  std::set_intersection(label_set.begin(), label_set.end(), i2.begin(), i2.end(), std::back_inserter(shared));
  if (shared != std::vector<Vertex>{std::min(labels[0], labels[1]), std::max(labels[0], labels[1])})
    throw ValidationError("pieces must meet exactly in {v1, v2}");
  add_clique(labels, 2, labels.size(), edges);
  std::set<Edge> e2;
  add_mapped_edges(other->host, *other_map, e2);
  if (!e2.contains(Edge(labels[0], labels[1]))) throw ValidationError("other piece must contain v1v2");
  edges.insert(e2.begin(), e2.end());
  std::set<Vertex> all = label_set;
  all.insert(i2.begin(), i2.end());

  const EdgeCase& ec = (which == SpecialTwoCut::K4Edge) ? kK4Edge : kK6Edge;
  std::vector<VertexList> b = mapped_cycles(k2, *other_map);
  const Arc fwd{labels[0], labels[1]};
  const Arc back{labels[1], labels[0]};
  const std::size_t b1 = unique_cycle_with(b, fwd);
  const std::size_t b2 = unique_cycle_with(b, back);
  std::vector<VertexList> out;
  for (const auto& c : ec.cycles) out.push_back(from_labels(c, labels));
  out.push_back(reroute(b[b1], fwd, from_labels(ec.forward_via, labels)));
  out.push_back(reroute(b[b2], back, from_labels(ec.backward_via, labels)));
  erase_indices(b, {b1, b2});
  out.insert(out.end(), b.begin(), b.end());
  return finish(assemble(dense_order(all), edges), to_cycles(out),
                std::string("merge_2cut_special[") + (which == SpecialTwoCut::K4Edge ? "K4" : "K6") + "+edge](" + other->provenance + ")");
}

CoverCertificate merge_3edgecut(const CoverCertificate& c1, const CoverCertificate& c2, const MergeSpec& spec,
                                ThreeCutPattern pattern, const std::vector<Vertex>& u, const std::vector<Vertex>& v) {
  const auto& k1 = verified_cycles(c1, "first piece");
  const auto& k2 = verified_cycles(c2, "second piece");
  check_map(c1.host, spec.map1, "first");
  check_map(c2.host, spec.map2, "second");
  const std::size_t nu = pattern == ThreeCutPattern::DistinctEndpoints ? 3 : 2;
  const std::size_t nv = pattern == ThreeCutPattern::SharedBoth ? 2 : 3;
  if (u.size() != nu || v.size() != nv) throw ValidationError("3-edge cut endpoint lists do not match the pattern");

  auto contracted = [](const VertexList& map) {
    if (std::count(map.begin(), map.end(), -1) != 1) throw ValidationError("each 3-edge-cut piece needs exactly one contracted vertex");
    return static_cast<Vertex>(std::find(map.begin(), map.end(), -1) - map.begin());
  };
  const Vertex w1 = contracted(spec.map1);
  const Vertex w2 = contracted(spec.map2);
  const auto i1 = image(spec.map1);
  const auto i2 = image(spec.map2);
  std::vector<Vertex> shared;
  std::set_intersection(i1.begin(), i1.end(), i2.begin(), i2.end(), std::back_inserter(shared));
  if (!shared.empty()) throw ValidationError("3-edge-cut pieces must be disjoint");
  std::set<Vertex> all = i1;
  all.insert(i2.begin(), i2.end());
  const int n = dense_order(all);

  // Placeholders for the contracted vertices in whole-graph numbering.
  const Vertex W1 = n, W2 = n + 1;
  VertexList m1 = spec.map1, m2 = spec.map2;
  m1[static_cast<std::size_t>(w1)] = W1;
  m2[static_cast<std::size_t>(w2)] = W2;
  auto neighbor_set = [](const Graph& h, Vertex w, const VertexList& map) {
    std::set<Vertex> s;
    for (Vertex x : h.neighbors(w)) s.insert(map[static_cast<std::size_t>(x)]);
    return s;
  };
  if (neighbor_set(c1.host, w1, m1) != std::set<Vertex>(u.begin(), u.end()))
    throw ValidationError("contracted vertex of the first piece must be adjacent to exactly the u endpoints");
  if (neighbor_set(c2.host, w2, m2) != std::set<Vertex>(v.begin(), v.end()))
    throw ValidationError("contracted vertex of the second piece must be adjacent to exactly the v endpoints");

  std::set<Edge> edges;
  add_mapped_edges(c1.host, spec.map1, edges);
  add_mapped_edges(c2.host, spec.map2, edges);
  std::vector<std::pair<Vertex, Vertex>> cut;  // (u side, v side)
  switch (pattern) {
    case ThreeCutPattern::DistinctEndpoints: cut = {{u[0], v[0]}, {u[1], v[1]}, {u[2], v[2]}}; break;
    case ThreeCutPattern::SharedTail: cut = {{u[0], v[0]}, {u[0], v[1]}, {u[1], v[2]}}; break;
    case ThreeCutPattern::SharedBoth: cut = {{u[0], v[0]}, {u[0], v[1]}, {u[1], v[1]}}; break;
  }
  for (auto [a, b] : cut) edges.insert(Edge(a, b));

  std::vector<VertexList> a = mapped_cycles(k1, m1);
  std::vector<VertexList> b = mapped_cycles(k2, m2);
  // index of v-endpoint by vertex, and the transition map at w2
  auto index_in = [](const VertexList& list, Vertex x) {
    return static_cast<int>(std::find(list.begin(), list.end(), x) - list.begin());
  };
  // cycle through w entering from `from` and leaving to `to`
  auto through = [](const std::vector<VertexList>& cs, Vertex from, Vertex w, Vertex to) {
    std::size_t hit = cs.size();
    int count = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] == w && c[(k + c.size() - 1) % c.size()] == from && c[(k + 1) % c.size()] == to) {
          hit = i;
          ++count;
        }
    }
    return count == 1 ? hit : cs.size();
  };
  auto successor_at = [](const std::vector<VertexList>& cs, Vertex w, Vertex from) {
    for (const auto& c : cs)
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] == w && c[(k + c.size() - 1) % c.size()] == from) return c[(k + 1) % c.size()];
    throw CertificateInconsistency("no cycle enters the contracted vertex from " + std::to_string(from));
  };
  auto need = [&](const std::vector<VertexList>& cs, Vertex from, Vertex w, Vertex to) {
    const std::size_t i = through(cs, from, w, to);
    if (i == cs.size())
      throw CertificateInconsistency("expected exactly one cycle through " + std::to_string(from) + "->w->" + std::to_string(to));
    return i;
  };

  std::vector<VertexList> out;
  std::vector<std::size_t> drop_a, drop_b;
  if (pattern == ThreeCutPattern::DistinctEndpoints) {
    // sigma1(i) = j when a cycle enters w1 from u_i and leaves to u_j
    int s1[3], s2[3];
    for (int i = 0; i < 3; ++i) s1[i] = index_in(u, successor_at(a, W1, u[static_cast<std::size_t>(i)]));
    for (int i = 0; i < 3; ++i) s2[i] = index_in(v, successor_at(b, W2, v[static_cast<std::size_t>(i)]));
    if (s2[s1[0]] != 0) {
      for (auto& c : b) std::reverse(c.begin(), c.end());
      for (int i = 0; i < 3; ++i) s2[i] = index_in(v, successor_at(b, W2, v[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < 3; ++i) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(s1[i]);
      // side 2 cycle that leaves w2 towards v_i enters from v_{s1[i]}
      const std::size_t x = need(a, u[ui], W1, u[uj]);
      const std::size_t y = need(b, v[uj], W2, v[ui]);
      out.push_back(concat(open_at_vertex(a[x], W1), open_at_vertex(b[y], W2)));
      drop_a.push_back(x);
      drop_b.push_back(y);
    }
  } else if (pattern == ThreeCutPattern::SharedTail) {
    // side 2 transitions must be v1->v3, v2->v1, v3->v2
    if (through(b, v[0], W2, v[2]) == b.size())
      for (auto& c : b) std::reverse(c.begin(), c.end());
    const std::size_t a1 = need(a, u[0], W1, u[1]), a2 = need(a, u[1], W1, u[0]);
    const std::size_t b1 = need(b, v[0], W2, v[2]), b2 = need(b, v[1], W2, v[0]), b3 = need(b, v[2], W2, v[1]);
    out.push_back(concat(open_at_vertex(a[a1], W1), open_at_vertex(b[b3], W2)));
    out.push_back(concat(open_at_vertex(a[a2], W1), open_at_vertex(b[b1], W2)));
    out.push_back(concat({u[0]}, open_at_vertex(b[b2], W2)));
    drop_a = {a1, a2};
    drop_b = {b1, b2, b3};
  } else {
    const std::size_t a1 = need(a, u[0], W1, u[1]), a2 = need(a, u[1], W1, u[0]);
    const std::size_t b1 = need(b, v[0], W2, v[1]), b2 = need(b, v[1], W2, v[0]);
    out.push_back(concat(open_at_vertex(a[a1], W1), open_at_vertex(b[b2], W2)));
    out.push_back(concat(open_at_vertex(a[a2], W1), {v[1]}));
    out.push_back(concat({u[0]}, open_at_vertex(b[b1], W2)));
    drop_a = {a1, a2};
    drop_b = {b1, b2};
  }
  erase_indices(a, drop_a);
  erase_indices(b, drop_b);
  for (const auto& c : a)
    if (std::find(c.begin(), c.end(), W1) != c.end()) throw CertificateInconsistency("extra cycle through the contracted vertex");
  for (const auto& c : b)
    if (std::find(c.begin(), c.end(), W2) != c.end()) throw CertificateInconsistency("extra cycle through the contracted vertex");
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  const char* name = pattern == ThreeCutPattern::DistinctEndpoints ? "distinct" : pattern == ThreeCutPattern::SharedTail ? "shared_tail" : "shared_both";
  return finish(assemble(n, edges), to_cycles(out),
                std::string("merge_3edgecut[") + name + "](" + c1.provenance + "; " + c2.provenance + ")");
}

CoverCertificate join_apex(const CoverCertificate& oppdc) {
  const auto& paths = verified_paths(oppdc, "input");
  const Vertex w = oppdc.host.order();
  std::vector<DirectedCycle> out;
  for (const auto& p : paths) {
    if (p.degenerate()) throw DomainError("join_apex: a single-vertex path would need a 2-cycle through the apex");
    VertexList c{w};
    c.insert(c.end(), p.vertices().begin(), p.vertices().end());
    out.emplace_back(std::move(c));
  }
  return finish(join_graphs(oppdc.host, complete_graph(1)), std::move(out), "join_apex(" + oppdc.provenance + ")");
}

CoverCertificate strip_apex(const CoverCertificate& socdc, Vertex apex) {
  const auto& cycles = verified_cycles(socdc, "input");
  const Graph& h = socdc.host;
  if (!h.has_vertex(apex) || h.degree(apex) != h.order() - 1) throw PreconditionError("strip_apex: vertex is not adjacent to all others");
  if (static_cast<int>(cycles.size()) > h.order() - 1) throw PreconditionError("strip_apex needs a small cover");
  std::vector<DirectedPath> paths;
  for (const auto& c : cycles) {
    if (!c.contains(apex)) throw CertificateInconsistency("strip_apex: a cycle avoids the apex");
    VertexList p = open_at_vertex(c.vertices(), apex);
    for (Vertex& x : p)
      if (x > apex) --x;
    paths.emplace_back(std::move(p));
  }
  CoverCertificate out = make_path_certificate(h.without_vertex(apex), CoverKind::OPPDC, std::move(paths), "strip_apex(" + socdc.provenance + ")");
  require_valid(out);
  return out;
}

CoverCertificate prism_p2(const CoverCertificate& oppdc) {
  const auto& paths = verified_paths(oppdc, "input");
  std::vector<DirectedCycle> out;
  for (const auto& p : paths) {
    if (p.degenerate()) throw DomainError("prism_p2: single-vertex paths are not supported");
    VertexList c;
    for (Vertex x : p.vertices()) c.push_back(2 * x);
    for (auto it = p.vertices().rbegin(); it != p.vertices().rend(); ++it) c.push_back(2 * *it + 1);
    out.emplace_back(std::move(c));
  }
  return finish(cartesian_product(oppdc.host, path_graph(2)), std::move(out), "prism_p2(" + oppdc.provenance + ")");
}

FlaggedCover product_cycle_large(const CoverCertificate& socdc, int n) {
  const auto& cycles = verified_cycles(socdc, "input");
  if (n < 3) throw DomainError("product_cycle_large needs a cycle of length >= 3");
  const Graph& g = socdc.host;
  std::vector<DirectedCycle> out;
  for (int layer = 0; layer < n; ++layer)
    for (const auto& c : cycles) {
      VertexList l;
      for (Vertex x : c.vertices()) l.push_back(x * n + layer);
      out.emplace_back(std::move(l));
    }
  for (Vertex x = 0; x < g.order(); ++x) {
    VertexList col;
    for (int i = 0; i < n; ++i) col.push_back(x * n + i);
    out.emplace_back(col);
    std::reverse(col.begin(), col.end());
    out.emplace_back(col);
  }
  FlaggedCover r{finish(cartesian_product(g, cycle_graph(n)), std::move(out),
                        "product_cycle_large(" + socdc.provenance + ", " + std::to_string(n) + ")"),
                 n < 2 * g.order() + 1};
  return r;
}

}  // namespace ocdc
