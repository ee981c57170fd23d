#include "ocdc/cover.hpp"

#include <algorithm>
#include <map>

#include "ocdc/error.hpp"

namespace ocdc {

namespace {

void require_distinct(const std::vector<Vertex>& vs, const char* what) {
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError(std::string(what) + " repeats vertex " + std::to_string(*std::adjacent_find(sorted.begin(), sorted.end())));
  if (!sorted.empty() && sorted.front() < 0) throw ValidationError(std::string(what) + " has a negative vertex id");
}

}  // namespace

DirectedCycle::DirectedCycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw ValidationError("directed cycle needs at least 3 vertices");
  require_distinct(vertices_, "directed cycle");
  std::rotate(vertices_.begin(), std::min_element(vertices_.begin(), vertices_.end()), vertices_.end());
}

std::vector<Arc> DirectedCycle::arcs() const {
  std::vector<Arc> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  return out;
}

bool DirectedCycle::contains(Vertex v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }

bool DirectedCycle::contains(Arc a) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), a.tail);
  if (it == vertices_.end()) return false;
  ++it;
  return (it == vertices_.end() ? vertices_.front() : *it) == a.head;
}

DirectedCycle DirectedCycle::reversed() const { return DirectedCycle({vertices_.rbegin(), vertices_.rend()}); }

DirectedPath::DirectedPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("directed path needs at least one vertex");
  require_distinct(vertices_, "directed path");
}

std::vector<Arc> DirectedPath::arcs() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.push_back({vertices_[i], vertices_[i + 1]});
  return out;
}

std::string to_string(CoverKind k) {
  switch (k) {
    case CoverKind::CDC: return "CDC";
    case CoverKind::OCDC: return "OCDC";
    case CoverKind::SOCDC: return "SOCDC";
    case CoverKind::PPDC: return "PPDC";
    case CoverKind::OPPDC: return "OPPDC";
  }
  return "?";
}

CoverKind cover_kind_from_string(const std::string& s) {
  for (CoverKind k : {CoverKind::CDC, CoverKind::OCDC, CoverKind::SOCDC, CoverKind::PPDC, CoverKind::OPPDC})
    if (to_string(k) == s) return k;
  throw ValidationError("unknown cover kind '" + s + "'");
}

bool uses_cycles(CoverKind k) { return k == CoverKind::CDC || k == CoverKind::OCDC || k == CoverKind::SOCDC; }

const std::vector<DirectedCycle>& CoverCertificate::cycles() const {
  if (auto* c = std::get_if<std::vector<DirectedCycle>>(&elements)) return *c;
  throw ValidationError("certificate holds paths, not cycles");
}

const std::vector<DirectedPath>& CoverCertificate::paths() const {
  if (auto* p = std::get_if<std::vector<DirectedPath>>(&elements)) return *p;
  throw ValidationError("certificate holds cycles, not paths");
}

std::size_t CoverCertificate::size() const {
  return std::visit([](const auto& v) { return v.size(); }, elements);
}

CoverCertificate make_cycle_certificate(Graph host, CoverKind kind, std::vector<DirectedCycle> cycles, std::string provenance) {
  if (!uses_cycles(kind)) throw ValidationError(to_string(kind) + " certificates hold paths");
  return {std::move(host), kind, std::move(cycles), std::move(provenance)};
}

CoverCertificate make_path_certificate(Graph host, CoverKind kind, std::vector<DirectedPath> paths, std::string provenance) {
  if (uses_cycles(kind)) throw ValidationError(to_string(kind) + " certificates hold cycles");
  return {std::move(host), kind, std::move(paths), std::move(provenance)};
}

std::string to_string(Violation::What w) {
  switch (w) {
    case Violation::What::NotAnEdge: return "not_an_edge";
    case Violation::What::ArcMultiplicity: return "arc_multiplicity";
    case Violation::What::EdgeMultiplicity: return "edge_multiplicity";
    case Violation::What::StartMultiplicity: return "start_multiplicity";
    case Violation::What::EndMultiplicity: return "end_multiplicity";
    case Violation::What::EndpointMultiplicity: return "endpoint_multiplicity";
    case Violation::What::SizeBound: return "size_bound";
    case Violation::What::VertexOutOfRange: return "vertex_out_of_range";
  }
  return "?";
}

namespace {

void fill_counts(const Graph& g, int count, VerifyReport& r) {
  r.count = count;
  r.size_bound = g.order() - 1;
  r.small = count <= r.size_bound;
  if (g.order() > 0 && g.is_regular(3)) {
    r.cubic_bound = g.order() / 2 + 2;
    r.within_cubic_bound = count <= *r.cubic_bound;
  }
}

// Tallies arc usage; steps over non-edges are reported and skipped.
template <typename Element>
std::vector<int> tally_arcs(const Graph& g, const std::vector<Element>& elements, VerifyReport& r) {
  std::vector<int> use(static_cast<std::size_t>(g.arc_count()), 0);
  for (const Element& el : elements) {
    for (Vertex v : el.vertices())
      if (!g.has_vertex(v)) r.add({Violation::What::VertexOutOfRange, std::to_string(v), 1, 0});
    for (const Arc& a : el.arcs()) {
      r.total_length += 1;
      const int id = g.arc_index(a);
      if (id < 0)
        r.add({Violation::What::NotAnEdge, to_string(a), 1, 0});
      else
        ++use[static_cast<std::size_t>(id)];
    }
  }
  return use;
}

void check_arcs_once(const Graph& g, const std::vector<int>& use, VerifyReport& r) {
  for (int id = 0; id < g.arc_count(); ++id)
    if (use[static_cast<std::size_t>(id)] != 1) r.add({Violation::What::ArcMultiplicity, to_string(g.arc(id)), use[static_cast<std::size_t>(id)], 1});
}

void check_edges_twice(const Graph& g, const std::vector<int>& use, VerifyReport& r) {
  for (int e = 0; e < g.size(); ++e) {
    const int c = use[static_cast<std::size_t>(2 * e)] + use[static_cast<std::size_t>(2 * e + 1)];
    if (c != 2) r.add({Violation::What::EdgeMultiplicity, to_string(g.edges()[static_cast<std::size_t>(e)]), c, 2});
  }
}

void check_vertex_counts(const Graph& g, const std::vector<int>& seen, Violation::What what, int expected, VerifyReport& r) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (seen[static_cast<std::size_t>(v)] != expected) r.add({what, std::to_string(v), seen[static_cast<std::size_t>(v)], expected});
}

}  // namespace

VerifyReport verify_cdc(const Graph& g, const std::vector<DirectedCycle>& cycles) {
  VerifyReport r;
  fill_counts(g, static_cast<int>(cycles.size()), r);
  check_edges_twice(g, tally_arcs(g, cycles, r), r);
  return r;
}

VerifyReport verify_ocdc(const Graph& g, const std::vector<DirectedCycle>& cycles) {
  VerifyReport r;
  fill_counts(g, static_cast<int>(cycles.size()), r);
  check_arcs_once(g, tally_arcs(g, cycles, r), r);
  return r;
}

VerifyReport verify_socdc(const Graph& g, const std::vector<DirectedCycle>& cycles) {
  VerifyReport r = verify_ocdc(g, cycles);
  if (!r.small) r.add({Violation::What::SizeBound, "cover", r.count, r.size_bound});
  return r;
}

VerifyReport verify_ppdc(const Graph& g, const std::vector<DirectedPath>& paths) {
  VerifyReport r;
  fill_counts(g, static_cast<int>(paths.size()), r);
  check_edges_twice(g, tally_arcs(g, paths, r), r);
  std::vector<int> ends(static_cast<std::size_t>(g.order()), 0);
  for (const DirectedPath& p : paths)
    for (Vertex v : {p.start(), p.end()})
      if (g.has_vertex(v)) ++ends[static_cast<std::size_t>(v)];
  check_vertex_counts(g, ends, Violation::What::EndpointMultiplicity, 2, r);
  return r;
}

VerifyReport verify_oppdc(const Graph& g, const std::vector<DirectedPath>& paths) {
  VerifyReport r;
  fill_counts(g, static_cast<int>(paths.size()), r);
  check_arcs_once(g, tally_arcs(g, paths, r), r);
  std::vector<int> starts(static_cast<std::size_t>(g.order()), 0), ends = starts;
  for (const DirectedPath& p : paths) {
    if (g.has_vertex(p.start())) ++starts[static_cast<std::size_t>(p.start())];
    if (g.has_vertex(p.end())) ++ends[static_cast<std::size_t>(p.end())];
  }
  check_vertex_counts(g, starts, Violation::What::StartMultiplicity, 1, r);
  check_vertex_counts(g, ends, Violation::What::EndMultiplicity, 1, r);
  return r;
}

VerifyReport verify(const CoverCertificate& cert) {
  switch (cert.kind) {
    case CoverKind::CDC: return verify_cdc(cert.host, cert.cycles());
    case CoverKind::OCDC: return verify_ocdc(cert.host, cert.cycles());
    case CoverKind::SOCDC: return verify_socdc(cert.host, cert.cycles());
    case CoverKind::PPDC: return verify_ppdc(cert.host, cert.paths());
    case CoverKind::OPPDC: return verify_oppdc(cert.host, cert.paths());
  }
  throw ValidationError("unknown cover kind");
}

void require_valid(const CoverCertificate& cert) {
  const VerifyReport r = verify(cert);
  if (!r.ok) {
    const Violation& v = r.violations.front();
    throw CertificateInconsistency(to_string(cert.kind) + " certificate (" + cert.provenance + ") fails: " + to_string(v.what) +
                                   " " + v.subject + " observed " + std::to_string(v.observed) + " expected " +
                                   std::to_string(v.expected));
  }
}

std::vector<DirectedCycle> reversed_all(const std::vector<DirectedCycle>& cycles) {
  std::vector<DirectedCycle> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.reversed());
  return out;
}

void canonicalize(std::vector<DirectedCycle>& cycles) { std::sort(cycles.begin(), cycles.end()); }
void canonicalize(std::vector<DirectedPath>& paths) { std::sort(paths.begin(), paths.end()); }

}  // namespace ocdc
