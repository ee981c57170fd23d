#include <random>

#include "doctest.h"
#include "merge_cases.hpp"
#include "ocdc/compose.hpp"
#include "ocdc/constructors.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/products.hpp"

using namespace ocdc;

TEST_CASE("randomized merges keep the cycle arithmetic") {
  std::mt19937_64 rng(101);
  for (test::MergeKind k : {test::MergeKind::CutVertex, test::MergeKind::TwoCutShared, test::MergeKind::TwoCutNoEdge,
                            test::MergeKind::ThreeCutI, test::MergeKind::ThreeCutII, test::MergeKind::ThreeCutIII}) {
    CAPTURE(test::name(k));
    for (int trial = 0; trial < 25; ++trial) {
      const test::MergeCase m = test::random_merge(rng, k);
      CHECK(verify_ocdc(m.result.host, m.result.cycles()).ok);
      CHECK(static_cast<long>(m.result.size()) == m.expected);
    }
  }
}

TEST_CASE("cut-vertex merge of K4 copies") {
  const CoverCertificate k4 = ocdc_k4();
  const CoverCertificate m = merge_at_cutvertex(k4, k4, {{0, 1, 2, 3}, {3, 4, 5, 6}});
  CHECK(m.host == k4_chain_graph(2));
  CHECK(m.size() == 8);
  CHECK(m.kind == CoverKind::OCDC);
  CHECK_THROWS_AS(merge_at_cutvertex(k4, k4, {{0, 1, 2, 3}, {2, 3, 4, 5}}), ValidationError);
  CHECK_THROWS_AS(merge_at_cutvertex(k4, k4, {{0, 1, 2}, {3, 4, 5, 6}}), ValidationError);
  CoverCertificate broken = k4;
  broken.elements = std::vector<DirectedCycle>(k4.cycles().begin(), k4.cycles().end() - 1);
  CHECK_THROWS_AS(merge_at_cutvertex(broken, k4, {{0, 1, 2, 3}, {3, 4, 5, 6}}), PreconditionError);
}

TEST_CASE("subdivide keeps the count") {
  const CoverCertificate c = socdc_complete_odd(5);
  const CoverCertificate s = subdivide(c, Edge(1, 3));
  CHECK(s.host.order() == 6);
  CHECK(s.size() == c.size());
  CHECK(verify_ocdc(s.host, s.cycles()).ok);
  CHECK_FALSE(s.host.has_edge(1, 3));
  CHECK(s.host.has_edge(1, 5));
  CHECK_THROWS_AS(subdivide(c, Edge(0, 7)), DomainError);
}

TEST_CASE("the explicit K4/K6 2-cut tables verify verbatim") {
  struct Row {
    SpecialTwoCut which;
    int n;
    std::size_t count;
  };
  for (const Row& r : {Row{SpecialTwoCut::K4K4, 6, 4}, Row{SpecialTwoCut::K4K6, 8, 6}, Row{SpecialTwoCut::K6K6, 10, 8}}) {
    std::vector<Vertex> labels(static_cast<std::size_t>(r.n));
    std::iota(labels.begin(), labels.end(), 0);
    const CoverCertificate c = merge_2cut_special(r.which, labels);
    CHECK(verify_ocdc(c.host, c.cycles()).ok);
    CHECK(c.size() == r.count);
    CHECK(static_cast<std::size_t>(c.host.order()) == labels.size());
    CHECK_FALSE(c.host.has_edge(0, 1));
    // relabeled copies verify too
    std::mt19937_64 rng(static_cast<std::uint64_t>(r.n));
    std::shuffle(labels.begin(), labels.end(), rng);
    CHECK(verify(merge_2cut_special(r.which, labels)).ok);
  }
}

TEST_CASE("K4/K6 edge tables splice into another cover") {
  // other piece: K5 on {v1, v2, 4, 5, 6}, which keeps v1v2
  const CoverCertificate k5 = socdc_complete_odd(5);
  const std::vector<Vertex> map4{0, 1, 4, 5, 6};
  const CoverCertificate a = merge_2cut_special(SpecialTwoCut::K4Edge, {0, 1, 2, 3}, &k5, &map4);
  CHECK(verify_ocdc(a.host, a.cycles()).ok);
  CHECK(a.host.has_edge(0, 1));
  CHECK(a.host.order() == 7);
  CHECK(a.size() == k5.size() + 2);
  const std::vector<Vertex> map6{0, 1, 6, 7, 8};
  const CoverCertificate b = merge_2cut_special(SpecialTwoCut::K6Edge, {0, 1, 2, 3, 4, 5}, &k5, &map6);
  CHECK(verify_ocdc(b.host, b.cycles()).ok);
  CHECK(b.size() == k5.size() + 4);
  CHECK_THROWS(merge_2cut_special(SpecialTwoCut::K4Edge, {0, 1, 2, 3}));
}

TEST_CASE("apex round trips") {
  std::mt19937_64 rng(7);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 25; ++trial) {
    const Graph g = test::random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.6);
    if (!is_connected(g)) continue;
    const SearchOutcome o = find_oppdc(g);
    if (o.status != SearchStatus::Found) continue;
    ++done;
    const CoverCertificate joined = join_apex(*o.certificate);
    CHECK(joined.size() == static_cast<std::size_t>(g.order()));
    CHECK(joined.kind == CoverKind::SOCDC);
    const CoverCertificate back = strip_apex(joined, g.order());
    auto a = back.paths(), b = o.certificate->paths();
    canonicalize(a);
    canonicalize(b);
    CHECK(a == b);
    auto c = join_apex(back).cycles(), d = joined.cycles();
    canonicalize(c);
    canonicalize(d);
    CHECK(c == d);
  }
  CHECK(done >= 20);
  const CoverCertificate k1 = make_path_certificate(Graph(1), CoverKind::OPPDC, {DirectedPath({0})}, "k1");
  CHECK_THROWS_AS(join_apex(k1), DomainError);
  CHECK_THROWS_AS(prism_p2(k1), DomainError);
  CHECK_THROWS_AS(strip_apex(ocdc_k6(), 0), PreconditionError);
}

TEST_CASE("strip_apex renumbers around an interior apex") {
  const CoverCertificate p = *cached_complete_oppdc(7);
  CoverCertificate j = join_apex(p);  // apex 7
  // move the apex to id 3 by swapping labels 3 and 7
  std::vector<DirectedCycle> swapped;
  for (const DirectedCycle& c : j.cycles()) {
    std::vector<Vertex> v = c.vertices();
    for (Vertex& x : v) x = x == 3 ? 7 : x == 7 ? 3 : x;
    swapped.emplace_back(v);
  }
  const CoverCertificate s = make_cycle_certificate(j.host, CoverKind::SOCDC, swapped, "swapped");
  const CoverCertificate back = strip_apex(s, 3);
  CHECK(verify(back).ok);
  CHECK(back.host == complete_graph(7));
}

TEST_CASE("prism over searched OPPDCs") {
  std::mt19937_64 rng(13);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 15; ++trial) {
    const Graph g = test::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.6);
    if (!is_connected(g)) continue;
    const SearchOutcome o = find_oppdc(g);
    if (o.status != SearchStatus::Found) continue;
    ++done;
    const CoverCertificate pr = prism_p2(*o.certificate);
    CHECK(pr.size() == static_cast<std::size_t>(g.order()));
    CHECK(pr.host == cartesian_product(g, path_graph(2)));
    CHECK(verify_socdc(pr.host, pr.cycles()).ok);
  }
  CHECK(done >= 10);
}

TEST_CASE("product with a long cycle") {
  const CoverCertificate c3 = socdc_complete_odd(3);
  const FlaggedCover big = product_cycle_large(c3, 7);
  CHECK_FALSE(big.bound_violation);
  CHECK(big.certificate.size() == 20);
  CHECK(big.certificate.host == cartesian_product(complete_graph(3), cycle_graph(7)));
  CHECK(verify_socdc(big.certificate.host, big.certificate.cycles()).ok);
  const FlaggedCover low = product_cycle_large(c3, 5);
  CHECK(low.bound_violation);
  CHECK(verify_ocdc(low.certificate.host, low.certificate.cycles()).ok);
  CHECK_THROWS_AS(product_cycle_large(c3, 2), DomainError);
  for (int n = 11; n <= 13; ++n) {
    const FlaggedCover f = product_cycle_large(socdc_complete_odd(5), n);
    CHECK(static_cast<int>(f.certificate.size()) == 4 * n + 10);
    CHECK(verify(f.certificate).ok);
  }
}

TEST_CASE("product_lift") {
  CHECK(classify_factor(path_graph(4)) == LiftFactor::Path);
  CHECK(classify_factor(Graph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)})) == LiftFactor::Tree);
  CHECK(classify_factor(cycle_graph(6)) == LiftFactor::EvenCycle);
  CHECK(classify_factor(cycle_graph(5)) == LiftFactor::OddCycle);
  CHECK_THROWS_AS(classify_factor(complete_graph(4)), DomainError);

  const LiftInputs k7{cached_complete_oppdc(7), socdc_complete_odd(7)};
  const SearchOutcome p2 = product_lift(k7, path_graph(2));
  REQUIRE(p2.status == SearchStatus::Found);
  CHECK(p2.certificate->size() == 7);
  const LiftInputs c3{std::nullopt, socdc_complete_odd(3)};
  const SearchOutcome c7 = product_lift(c3, cycle_graph(7));
  REQUIRE(c7.status == SearchStatus::Found);
  CHECK(c7.certificate->size() == 20);
  const SearchOutcome p3 = product_lift(c3, path_graph(3));
  REQUIRE(p3.status == SearchStatus::Found);
  CHECK(verify_socdc(p3.certificate->host, p3.certificate->cycles()).ok);
}

TEST_CASE("hypercube pipeline") {
  // Q2 = C4 has an OPPDC; the prism over it is Q3
  const SearchOutcome q2 = find_oppdc(hypercube_graph(2));
  REQUIRE(q2.status == SearchStatus::Found);
  const CoverCertificate q3 = prism_p2(*q2.certificate);
  CHECK(verify_socdc(q3.host, q3.cycles()).ok);
  CHECK(q3.size() == 4);
}
