#include <random>

#include "doctest.h"
#include "ocdc/constructors.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/orient.hpp"

using namespace ocdc;

TEST_CASE("explicit K4 and K6 covers") {
  const CoverCertificate k4 = ocdc_k4();
  CHECK(verify(k4).ok);
  CHECK(k4.size() == 4);
  const CoverCertificate k6 = ocdc_k6();
  CHECK(verify(k6).ok);
  CHECK(k6.size() == 6);
}

TEST_CASE("odd complete graphs") {
  for (int n = 3; n <= 21; n += 2) {
    const CoverCertificate c = socdc_complete_odd(n);
    CHECK(verify(c).ok);
    CHECK(static_cast<int>(c.size()) == n - 1);
    for (const DirectedCycle& x : c.cycles()) CHECK(x.length() == n);
  }
  CHECK_THROWS_AS(socdc_complete_odd(4), DomainError);
  CHECK_THROWS_AS(socdc_complete_odd(1), DomainError);
}

TEST_CASE("even complete graphs") {
  for (int n : {8, 10, 12, 14}) {
    const CoverCertificate c = socdc_complete_even(n);
    CHECK(verify(c).ok);
    CHECK(c.kind == CoverKind::SOCDC);
    CHECK(static_cast<int>(c.size()) == n - 1);
  }
  CHECK_THROWS_AS(socdc_complete_even(4), NoSocdcExists);
  CHECK_THROWS_AS(socdc_complete_even(6), NoSocdcExists);
  CHECK_THROWS_AS(socdc_complete_even(7), DomainError);
  SearchOptions tiny;
  tiny.budget.node_limit = 10;
  CHECK_THROWS_AS(socdc_complete_even(16, tiny), Unresolved);
  for (int n : {7, 9, 11}) {
    const auto p = cached_complete_oppdc(n);
    REQUIRE(p.has_value());
    CHECK(verify(*p).ok);
  }
  CHECK_FALSE(cached_complete_oppdc(5).has_value());
}

TEST_CASE("complete bipartite formula") {
  for (int n = 2; n <= 8; ++n)
    for (int m = n; m <= 9; ++m) {
      const CoverCertificate c = socdc_complete_bipartite(n, m);
      CHECK(verify(c).ok);
      CHECK(static_cast<int>(c.size()) == m);
      for (const DirectedCycle& x : c.cycles()) CHECK(x.length() == 2 * n);
    }
  CHECK_THROWS_AS(socdc_complete_bipartite(3, 2), DomainError);
  CHECK_THROWS_AS(socdc_complete_bipartite(1, 4), DomainError);
}

TEST_CASE("planar face covers") {
  const PlanarFixture cube = planar_fixture("cube");
  const PlanarCover pc = socdc_planar(cube.graph, cube.rotation);
  CHECK(pc.certificate.size() == 6);
  CHECK_FALSE(pc.bound_violation);
  CHECK(pc.certificate.kind == CoverKind::SOCDC);
  const PlanarFixture k4 = planar_fixture("k4");
  const PlanarCover pk = socdc_planar(k4.graph, k4.rotation);
  CHECK(pk.certificate.size() == 4);
  CHECK(pk.bound_violation);
  CHECK(pk.certificate.kind == CoverKind::OCDC);
  for (int n = 3; n <= 9; ++n)
    for (std::string family : {"cycle:", "wheel:", "prism:"}) {
      const PlanarFixture f = planar_fixture(family + std::to_string(n));
      const PlanarCover c = socdc_planar(f.graph, f.rotation);
      CHECK(verify(c.certificate).ok);
      CHECK(static_cast<int>(c.certificate.size()) == 2 + f.graph.size() - f.graph.order());
    }
}

TEST_CASE("planar faces split at repeated vertices") {
  // two triangles sharing vertex 0
  const Graph bowtie(5, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(0, 4), Edge(3, 4)});
  const RotationSystem rot = rotation_from_coordinates(bowtie, {{0, 0}, {-1, 1}, {-1, -1}, {1, 1}, {1, -1}});
  const PlanarCover c = socdc_planar(bowtie, rot);
  CHECK(c.split);
  CHECK(verify(c.certificate).ok);
  CHECK(c.certificate.size() == 4);
}

TEST_CASE("planar rejects bad input") {
  CHECK_THROWS_AS(socdc_planar(path_graph(3), RotationSystem({{1}, {0, 2}, {1}})), DomainError);
  // a toroidal rotation of K4: search all rotations for one with fewer faces
  const Graph k4 = complete_graph(4);
  bool found = false;
  std::vector<std::vector<Vertex>> rot{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  for (int mask = 0; mask < 16 && !found; ++mask) {
    auto r = rot;
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) std::swap(r[static_cast<std::size_t>(v)][1], r[static_cast<std::size_t>(v)][2]);
    if (faces(k4, RotationSystem(r)).size() != 4) {
      found = true;
      CHECK_THROWS_AS(socdc_planar(k4, RotationSystem(r)), NotPlanarEmbedding);
    }
  }
  CHECK(found);
}

TEST_CASE("cubic edge coloring") {
  for (const Graph& g : {hypercube_graph(3), mobius_kantor_graph(), complete_bipartite_graph(3, 3), prism_graph(5),
                         complete_graph(4), generalized_petersen_graph(7, 2)}) {
    const ColoringResult r = edge_color_cubic(g);
    REQUIRE(r.verdict == ColoringVerdict::Colored);
    CHECK(is_proper_3_edge_coloring(g, *r.coloring));
    const auto cdc = two_factor_cdc(g, *r.coloring);
    CHECK(verify_cdc(g, cdc).ok);
    for (const DirectedCycle& c : cdc) CHECK(c.length() % 2 == 0);
  }
  CHECK(edge_color_cubic(petersen_graph()).verdict == ColoringVerdict::Class2);
  CHECK_THROWS_AS(edge_color_cubic(complete_graph(5)), DomainError);
  CHECK_FALSE(is_proper_3_edge_coloring(complete_graph(4), EdgeColoring3{{0, 0, 1, 1, 2, 2}}));
}

TEST_CASE("cubic class-1 pipeline") {
  for (const Graph& g : {complete_bipartite_graph(3, 3), prism_graph(3), hypercube_graph(3), mobius_kantor_graph(),
                         prism_graph(5), generalized_petersen_graph(7, 2)}) {
    const CubicCover c = ocdc_cubic_class1(g);
    CHECK(verify(c.certificate).ok);
    CHECK(static_cast<int>(c.certificate.size()) <= g.order() / 2 + 2);
    CHECK(static_cast<int>(c.certificate.size()) <= g.order() - 1);
    if (!c.from_two_factors) CHECK(witness_parity(c.witness) == 1);
  }
  CHECK(ocdc_cubic_class1(hypercube_graph(3)).from_two_factors);
  CHECK(ocdc_cubic_class1(mobius_kantor_graph()).from_two_factors);
  const CubicCover k4 = ocdc_cubic_class1(complete_graph(4));
  CHECK_FALSE(k4.from_two_factors);
  CHECK(verify_ocdc(k4.certificate.host, k4.certificate.cycles()).ok);
  CHECK_THROWS_AS(ocdc_cubic_class1(complete_graph(4), EdgeColoring3{{0, 0, 1, 1, 2, 2}}), PreconditionError);
  CHECK_THROWS_AS(ocdc_cubic_class1(petersen_graph()), DomainError);
}
