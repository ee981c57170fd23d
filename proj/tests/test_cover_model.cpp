#include <algorithm>
#include <random>

#include "doctest.h"
#include "ocdc/certificate_io.hpp"
#include "ocdc/constructors.hpp"
#include "ocdc/cover.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/orient.hpp"
#include "ocdc/search.hpp"
#include "support.hpp"

using namespace ocdc;

namespace {

std::vector<DirectedCycle> cycles(std::vector<std::vector<Vertex>> lists) {
  std::vector<DirectedCycle> out;
  for (auto& l : lists) out.emplace_back(std::move(l));
  return out;
}

bool has(const VerifyReport& r, Violation::What w) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.what == w; });
}

}  // namespace

TEST_CASE("cycle and path values") {
  CHECK_THROWS_AS(DirectedCycle({0, 1}), ValidationError);
  CHECK_THROWS_AS(DirectedCycle({0, 1, 0}), ValidationError);
  CHECK_THROWS_AS(DirectedPath({}), ValidationError);
  CHECK(DirectedPath({4}).degenerate());
  const DirectedCycle c({2, 0, 1});
  CHECK(c.contains(Arc{0, 1}));
  CHECK(c.contains(Arc{1, 2}));
  CHECK_FALSE(c.contains(Arc{1, 0}));
  CHECK(c.reversed().contains(Arc{1, 0}));
  std::vector<DirectedCycle> v{DirectedCycle({2, 0, 1}), DirectedCycle({1, 0, 2})};
  canonicalize(v);
  CHECK(v[0].vertices() == std::vector<Vertex>{0, 1, 2});
  CHECK(v[1].vertices() == std::vector<Vertex>{0, 2, 1});
}

TEST_CASE("verifiers accept known covers") {
  const Graph k4 = complete_graph(4);
  const auto k4c = cycles({{0, 1, 3}, {1, 0, 2}, {2, 3, 1}, {3, 2, 0}});
  const VerifyReport r = verify_ocdc(k4, k4c);
  CHECK(r.ok);
  CHECK(r.count == 4);
  CHECK(r.total_length == 2 * k4.size());
  CHECK_FALSE(r.small);
  CHECK(r.cubic_bound == 4);
  // K4 has an OCDC but no SOCDC
  const VerifyReport s = verify_socdc(k4, k4c);
  CHECK_FALSE(s.ok);
  CHECK(has(s, Violation::What::SizeBound));
  CHECK(verify_cdc(k4, k4c).ok);
}

TEST_CASE("verifiers report violations as data") {
  const Graph k4 = complete_graph(4);
  auto c = cycles({{0, 1, 3}, {1, 0, 2}, {2, 3, 1}, {3, 2, 0}});
  auto dropped = c;
  dropped.pop_back();
  CHECK(has(verify_ocdc(k4, dropped), Violation::What::ArcMultiplicity));
  auto flipped = c;
  flipped[0] = flipped[0].reversed();
  const VerifyReport f = verify_ocdc(k4, flipped);
  CHECK(has(f, Violation::What::ArcMultiplicity));
  CHECK(verify_cdc(k4, flipped).ok);  // orientation is irrelevant for a CDC
  const Graph c4 = cycle_graph(4);
  const VerifyReport ne = verify_ocdc(c4, cycles({{0, 1, 2}}));
  CHECK(has(ne, Violation::What::NotAnEdge));
  const VerifyReport out = verify_ocdc(c4, cycles({{0, 1, 9}}));
  CHECK(has(out, Violation::What::VertexOutOfRange));
}

TEST_CASE("ok iff no violations, over random mutations") {
  std::mt19937_64 rng(4);
  const CoverCertificate base = socdc_complete_odd(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<DirectedCycle> c = base.cycles();
    const std::size_t i = rng() % c.size();
    switch (rng() % 3) {
      case 0: c[i] = c[i].reversed(); break;
      case 1: c.erase(c.begin() + static_cast<long>(i)); break;
      default: c.push_back(c[i]); break;
    }
    for (const VerifyReport& r : {verify_ocdc(base.host, c), verify_socdc(base.host, c), verify_cdc(base.host, c)})
      CHECK(r.ok == r.violations.empty());
    CHECK_FALSE(verify_ocdc(base.host, c).ok);
  }
}

TEST_CASE("path cover verifiers") {
  const CoverCertificate p = *cached_complete_oppdc(7);
  const VerifyReport r = verify(p);
  CHECK(r.ok);
  CHECK(r.count == 7);
  CHECK(verify_ppdc(p.host, p.paths()).ok);
  auto paths = p.paths();
  std::vector<Vertex> v = paths[0].vertices();
  std::reverse(v.begin(), v.end());
  paths[0] = DirectedPath(v);
  CHECK(verify_ppdc(p.host, paths).ok);
  CHECK_FALSE(verify_oppdc(p.host, paths).ok);
  // a single edge: 0->1 and 1->0 are a valid OPPDC of K2
  const Graph k2 = complete_graph(2);
  CHECK(verify_oppdc(k2, {DirectedPath({0, 1}), DirectedPath({1, 0})}).ok);
  CHECK(verify_oppdc(Graph(1), {DirectedPath({0})}).ok);
  const VerifyReport bad = verify_oppdc(k2, {DirectedPath({0, 1}), DirectedPath({1, 0}), DirectedPath({0})});
  CHECK(has(bad, Violation::What::StartMultiplicity));
}

TEST_CASE("a valid OPPDC always has n paths") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = test::random_bridgeless(rng, 3, 6, 0.7);
    const SearchOutcome o = find_oppdc(g);
    if (o.status != SearchStatus::Found) continue;
    ++checked;
    CHECK(static_cast<int>(o.certificate->paths().size()) == g.order());
  }
  CHECK(checked > 10);
}

TEST_CASE("orient_cdc recovers forgotten orientations") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = test::random_bridgeless(rng, 4, 7);
    SearchOptions opt;
    opt.seed = rng();
    const SearchOutcome o = find_ocdc(g, std::nullopt, opt);
    REQUIRE(o.status == SearchStatus::Found);
    std::vector<DirectedCycle> forgotten = o.certificate->cycles();
    for (auto& c : forgotten)
      if (rng() % 2) c = c.reversed();
    const OrientOutcome r = orient_cdc(g, forgotten);
    REQUIRE(r.feasible);
    CHECK(verify_ocdc(g, r.cycles).ok);
    for (std::size_t i = 0; i < forgotten.size(); ++i)
      CHECK(r.cycles[i] == (r.flips[i] ? forgotten[i].reversed() : forgotten[i]));
  }
}

TEST_CASE("orient_cdc infeasibility witness") {
  // the three Hamiltonian cycles of K4 form a CDC; an orientation would be an
  // OCDC with 3 cycles, and the minimum for K4 is 4
  const Graph k4 = complete_graph(4);
  const auto cdc = cycles({{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}});
  REQUIRE(verify_cdc(k4, cdc).ok);
  const OrientOutcome r = orient_cdc(k4, cdc);
  CHECK_FALSE(r.feasible);
  CHECK(witness_parity(r.witness) == 1);
  REQUIRE_FALSE(r.witness.empty());
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    const ParityStep& s = r.witness[i];
    const DirectedCycle& next = cdc[static_cast<std::size_t>(r.witness[(i + 1) % r.witness.size()].cycle)];
    const DirectedCycle& here = cdc[static_cast<std::size_t>(s.cycle)];
    const bool here_has = here.contains(Arc{s.edge.u, s.edge.v}) || here.contains(Arc{s.edge.v, s.edge.u});
    const bool next_has = next.contains(Arc{s.edge.u, s.edge.v}) || next.contains(Arc{s.edge.v, s.edge.u});
    CHECK(here_has);
    CHECK(next_has);
  }
  CHECK_THROWS_AS(orient_cdc(k4, {cdc[0]}), PreconditionError);
}

TEST_CASE("double_cycle_decomposition") {
  const Graph k5 = complete_graph(5);
  const auto d = double_cycle_decomposition(k5, cycles({{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}}));
  CHECK(d.size() == 4);
  CHECK(verify_ocdc(k5, d).ok);
  CHECK_THROWS_AS(double_cycle_decomposition(k5, cycles({{0, 1, 2, 3, 4}})), PreconditionError);
  CHECK_THROWS_AS(double_cycle_decomposition(k5, cycles({{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}})), PreconditionError);
}

TEST_CASE("size predicates") {
  const CoverCertificate mk = ocdc_cubic_class1(mobius_kantor_graph()).certificate;
  CHECK(cubic_bound_check(mk.host, mk.cycles()));
  CHECK(small_by_girth(mk.host, mk.cycles()));  // girth 6 > 3
  const CoverCertificate k4 = ocdc_k4();
  CHECK_FALSE(small_by_girth(k4.host, k4.cycles()));  // girth 3 = average degree
  CHECK_THROWS_AS(cubic_bound_check(complete_graph(5), {}), DomainError);
}

TEST_CASE("certificate JSON round trip") {
  for (const CoverCertificate& c : {socdc_complete_odd(5), ocdc_k6(), *cached_complete_oppdc(9), socdc_complete_bipartite(3, 4)}) {
    const CoverCertificate back = read_certificate(write_certificate(c));
    CHECK(back.host == c.host);
    CHECK(back.kind == c.kind);
    CHECK(back.provenance == c.provenance);
    CHECK(back.elements == c.elements);
    CHECK(verify(back).ok);
  }
}

TEST_CASE("certificate JSON errors") {
  CHECK_THROWS_AS(read_certificate("{"), ParseError);
  CHECK_THROWS_AS(read_certificate("{\"graph\": \"Bw\"}"), ParseError);
  CHECK_THROWS_AS(read_certificate(R"({"graph": "Bw", "kind": "nope", "elements": []})"), ParseError);
  CHECK_THROWS_AS(read_certificate(R"({"graph": "Bw", "kind": "OCDC", "elements": [[0, 1]]})"), ValidationError);
  const CoverCertificate bad = read_certificate(R"({"graph": "Bw", "kind": "OCDC", "elements": [[0, 1, 2]]})");
  CHECK_FALSE(verify(bad).ok);
}
