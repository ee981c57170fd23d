#ifndef OCDC_TESTS_SUPPORT_HPP
#define OCDC_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "ocdc/graph.hpp"
#include "ocdc/graph6.hpp"
#include "ocdc/structure.hpp"

namespace ocdc::test {

// Connected graphs on 2..6 vertices, one per isomorphism class (networkx atlas).
inline std::vector<Graph> catalog() {
  std::ifstream f(std::string(OCDC_TEST_DATA) + "/connected_2to6.g6");
  std::vector<Graph> out;
  for (std::string line; std::getline(f, line);)
    if (!line.empty()) out.push_back(parse_graph6(line));
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Rejection sampling; p near 0.6 makes bridgeless connected hosts common.
inline Graph random_bridgeless(std::mt19937_64& rng, int lo, int hi, double p = 0.6) {
  std::uniform_int_distribution<int> order(lo, hi);
  while (true) {
    Graph g = random_graph(rng, order(rng), p);
    if (g.size() > 0 && is_connected(g) && is_bridgeless(g)) return g;
  }
}

// Relabel by a random permutation.
inline Graph shuffled(std::mt19937_64& rng, const Graph& g, std::vector<Vertex>* perm_out = nullptr) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  if (perm_out) *perm_out = perm;
  return Graph(g.order(), edges);
}

}  // namespace ocdc::test

#endif  // OCDC_TESTS_SUPPORT_HPP
