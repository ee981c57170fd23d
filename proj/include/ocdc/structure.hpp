#ifndef OCDC_STRUCTURE_HPP
#define OCDC_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "ocdc/graph.hpp"

namespace ocdc {

/// Exact non-negative rational, kept in lowest terms.
struct Rational {
  long num = 0;
  long den = 1;

  Rational() = default;
  Rational(long n, long d);

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;
};

std::string to_string(const Rational& r);

bool is_connected(const Graph& g);
/// Component id per vertex (ids dense from 0 in order of first vertex).
std::vector<int> components(const Graph& g, int* count = nullptr);

std::vector<Edge> bridges(const Graph& g);
bool is_bridgeless(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);

/// Smallest vertex cut of size <= k (lexicographically first among the
/// smallest), or nullopt. Brute force over subsets; requires k <= 3 and a
/// connected input (DomainError otherwise).
std::optional<std::vector<Vertex>> vertex_connectivity_at_most(const Graph& g, int k);
bool is_k_connected(const Graph& g, int k);
/// True iff removing any k-1 edges leaves g connected (k <= 3).
bool is_k_edge_connected(const Graph& g, int k);

struct EdgeCut {
  std::vector<Edge> edges;
  std::vector<Vertex> side_a;  // contains the smallest vertex
  std::vector<Vertex> side_b;
  bool nontrivial() const { return side_a.size() >= 2 && side_b.size() >= 2; }
};

/// Every edge set F, |F| = 3, that is exactly the set of edges between two
/// connected sides each with >= 2 vertices.
std::vector<EdgeCut> nontrivial_3_edge_cuts(const Graph& g);

struct Block {
  Graph graph;                   // induced on the block's vertices
  std::vector<Vertex> vertices;  // block vertex i -> vertex of the host
  bool is_bridge() const { return vertices.size() == 2; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;
};

/// Biconnected components (Hopcroft-Tarjan); bridges come back as K2 blocks.
BlockDecomposition blocks(const Graph& g);

struct GirthAndDegree {
  std::optional<int> girth;  // nullopt for forests
  Rational average_degree;
};

GirthAndDegree girth_and_average_degree(const Graph& g);

}  // namespace ocdc

#endif  // OCDC_STRUCTURE_HPP
