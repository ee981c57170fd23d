#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ocdc/compose.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/search.hpp"
#include "support.hpp"

using namespace ocdc;

namespace {

// Directed simple cycles of length >= 3, by trying every ordered vertex
// sequence that starts at its smallest vertex.
long brute_cycle_count(const Graph& g) {
  const int n = g.order();
  long total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (s.size() < 3) continue;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < s.size() && ok; ++i) ok = g.has_edge(s[i], s[(i + 1) % s.size()]);
      total += ok;
    } while (std::next_permutation(s.begin() + 1, s.end()));
  }
  return total;
}

long brute_path_count(const Graph& g) {
  long total = 0;
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  auto extend = [&](auto&& self, Vertex v) -> void {
    on[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v))
      if (!on[static_cast<std::size_t>(w)]) {
        ++total;
        self(self, w);
      }
    on[static_cast<std::size_t>(v)] = 0;
  };
  for (Vertex v = 0; v < g.order(); ++v) extend(extend, v);
  return total;
}

SearchOptions threads(int t) {
  SearchOptions o;
  o.budget.threads = t;
  return o;
}

}  // namespace

TEST_CASE("cycle counts match reference values") {
  // totals from networkx.simple_cycles on the symmetric digraph, 2-cycles removed
  CHECK(enumerate_directed_cycles(complete_graph(4)).size() == 14);
  CHECK(enumerate_directed_cycles(complete_graph(5)).size() == 74);
  CHECK(enumerate_directed_cycles(complete_graph(6)).size() == 394);
  CHECK(enumerate_directed_cycles(complete_graph(7)).size() == 2344);
  CHECK(enumerate_directed_cycles(petersen_graph()).size() == 114);
  CHECK(enumerate_directed_cycles(hypercube_graph(3)).size() == 56);
  CHECK(enumerate_directed_cycles(complete_bipartite_graph(3, 3)).size() == 30);
  CHECK(enumerate_directed_cycles(wheel_graph(5)).size() == 42);
  CHECK(enumerate_undirected_cycles(petersen_graph()).size() == 57);
  // K4 by hand: 4 triangles and 3 four-cycles, each in two directions
  CHECK(14 == 2 * (4 + 3));
}

TEST_CASE("cycle and path counts match brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = test::random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.55);
    const auto cycles = enumerate_directed_cycles(g);
    CHECK(static_cast<long>(cycles.size()) == brute_cycle_count(g));
    CHECK(2 * enumerate_undirected_cycles(g).size() == cycles.size());
    CHECK(static_cast<long>(enumerate_directed_paths(g).size()) == brute_path_count(g));
    for (const DirectedCycle& c : cycles) CHECK(c.vertices().front() == *std::min_element(c.vertices().begin(), c.vertices().end()));
    const auto capped = enumerate_directed_cycles(g, 4);
    CHECK(std::all_of(capped.begin(), capped.end(), [](const DirectedCycle& c) { return c.length() <= 4; }));
  }
}

TEST_CASE("K4 minimum is 4") {
  const SearchOutcome m = min_ocdc(complete_graph(4), 12);
  REQUIRE(m.status == SearchStatus::Found);
  CHECK(m.certificate->size() == 4);
  CHECK(m.lower_bound == 4);
  CHECK(find_ocdc(complete_graph(4), 3).status == SearchStatus::NoneExists);
  CHECK(find_socdc(complete_graph(4)).status == SearchStatus::NoneExists);
}

TEST_CASE("min_ocdc bounds are consistent") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = test::random_bridgeless(rng, 4, 7);
    const SearchOutcome m = min_ocdc(g, g.arc_count());
    REQUIRE(m.status == SearchStatus::Found);
    const int k = static_cast<int>(m.certificate->size());
    CHECK(k >= m.lower_bound);
    CHECK(k == m.lower_bound);
    CHECK(find_ocdc(g, k - 1).status == SearchStatus::NoneExists);
    CHECK(find_ocdc(g, k).status == SearchStatus::Found);
  }
  CHECK(min_ocdc(complete_graph(4), 3).status == SearchStatus::NoneExists);
  CHECK_THROWS_AS(min_ocdc(path_graph(3), 5), DomainError);
}

TEST_CASE("budgets yield Unresolved, never NoneExists") {
  SearchOptions o;
  o.budget.node_limit = 5;
  const SearchOutcome s = find_socdc(complete_graph(6), o);
  CHECK(s.status == SearchStatus::Unresolved);
  CHECK_FALSE(s.certificate.has_value());
  CHECK(s.budget.node_limit == 5);
  SearchOptions t;
  t.budget.time_limit = std::chrono::milliseconds(1);
  t.budget.node_limit = ~std::uint64_t{0};
  const SearchOutcome slow = find_oppdc(complete_graph(11), t);
  CHECK(slow.status == SearchStatus::Unresolved);
  CHECK(slow.timed_out);
}

TEST_CASE("results do not depend on the worker count") {
  for (const Graph& g : {complete_graph(6), petersen_graph(), k4_chain_graph(2), complete_graph(7)}) {
    const SearchOutcome a = find_socdc(g, threads(1));
    for (int t : {2, 3, 4}) {
      const SearchOutcome b = find_socdc(g, threads(t));
      CHECK(b.status == a.status);
      CHECK(b.nodes_expanded == a.nodes_expanded);
      CHECK(b.certificate.has_value() == a.certificate.has_value());
      if (a.certificate && b.certificate) CHECK(b.certificate->elements == a.certificate->elements);
    }
  }
  const SearchOutcome p1 = find_oppdc(complete_graph(7), threads(1));
  const SearchOutcome p4 = find_oppdc(complete_graph(7), threads(4));
  CHECK(p1.certificate->elements == p4.certificate->elements);
}

TEST_CASE("seeded search is reproducible") {
  SearchOptions o;
  o.seed = 99;
  const SearchOutcome a = find_ocdc(petersen_graph(), std::nullopt, o);
  const SearchOutcome b = find_ocdc(petersen_graph(), std::nullopt, o);
  CHECK(a.certificate->elements == b.certificate->elements);
}

TEST_CASE("OPPDC searches") {
  CHECK(find_oppdc(complete_graph(3)).status == SearchStatus::NoneExists);
  CHECK(find_oppdc(complete_graph(5)).status == SearchStatus::NoneExists);
  const SearchOutcome k7 = find_oppdc(complete_graph(7));
  REQUIRE(k7.status == SearchStatus::Found);
  CHECK(verify(*k7.certificate).ok);
  CHECK(find_oppdc(Graph(1)).status == SearchStatus::Found);
  for (int n : {7, 9, 11, 13}) {
    const SearchOutcome s = find_oppdc_sequential(complete_graph(n));
    REQUIRE(s.status == SearchStatus::Found);
    CHECK(verify(*s.certificate).ok);
  }
  CHECK(find_oppdc_sequential(complete_graph(5)).status == SearchStatus::NoneExists);
  CHECK_THROWS_AS(find_oppdc_via_apex(Graph(1)), DomainError);
}

TEST_CASE("sequential and exact-cover OPPDC searches agree") {
  for (const Graph& g : test::catalog()) {
    if (g.order() > 5) continue;
    CAPTURE(emit_graph6(g));
    const SearchOutcome a = find_oppdc(g), b = find_oppdc_sequential(g);
    CHECK(a.status == b.status);
    if (b.certificate) CHECK(verify(*b.certificate).ok);
  }
}

TEST_CASE("OPPDC and SOCDC of the join agree on small graphs") {
  for (const Graph& g : test::catalog()) {
    if (g.order() > 5) continue;
    CAPTURE(emit_graph6(g));
    const SearchOutcome p = find_oppdc(g);
    const SearchOutcome s = find_socdc(join_graphs(g, complete_graph(1)));
    CHECK(p.status == s.status);
    const SearchOutcome via = find_oppdc_via_apex(g);
    CHECK(via.status == p.status);
    if (via.certificate) CHECK(verify(*via.certificate).ok);
  }
}

TEST_CASE("unorientable CDCs") {
  const UnorientableOutcome p = find_unorientable_cdc(petersen_graph());
  REQUIRE(p.status == SearchStatus::Found);
  CHECK(verify_cdc(petersen_graph(), p.cdc).ok);
  CHECK(witness_parity(p.witness) == 1);
  CHECK_FALSE(orient_cdc(petersen_graph(), p.cdc).feasible);
  // every CDC of a cycle orients
  CHECK(find_unorientable_cdc(cycle_graph(5)).status == SearchStatus::NoneExists);
  std::size_t total = 0;
  const ExactCoverResult r = for_each_cdc(complete_graph(4), {}, [&](const std::vector<DirectedCycle>& cdc) {
    CHECK(verify_cdc(complete_graph(4), cdc).ok);
    ++total;
    return true;
  });
  CHECK(r.status == SearchStatus::NoneExists);
  CHECK(total > 0);
}

TEST_CASE("counterexample filter") {
  auto conditions = [](const Graph& g) {
    std::vector<std::string> out;
    for (const auto& v : counterexample_filter(g)) out.push_back(v.condition);
    return out;
  };
  auto has = [](const std::vector<std::string>& v, const char* c) { return std::find(v.begin(), v.end(), c) != v.end(); };
  CHECK(has(conditions(complete_graph(4)), "conjecture_exception"));
  CHECK(has(conditions(complete_graph(6)), "conjecture_exception"));
  CHECK(has(conditions(k4_chain_graph(2)), "not_2_connected"));
  CHECK(has(conditions(cycle_graph(5)), "min_degree_below_3"));
  CHECK(has(conditions(prism_graph(3)), "nontrivial_3_edge_cut"));
  CHECK(has(conditions(complete_bipartite_graph(2, 4)), "min_degree_below_3"));
  CHECK(conditions(petersen_graph()).empty());
  CHECK(conditions(complete_graph(5)).empty());
}
