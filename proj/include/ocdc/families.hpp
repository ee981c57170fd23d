#ifndef OCDC_FAMILIES_HPP
#define OCDC_FAMILIES_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ocdc/graph.hpp"

namespace ocdc {

// Graph generators. Vertex numbering is part of the contract:
//
//   complete(n)               0..n-1
//   complete_bipartite(n,m)   left side 0..n-1, right side n..n+m-1
//   path(n), cycle(n)         0..n-1 in order along the path / cycle
//   hypercube(d)              bit strings; x ~ y iff they differ in one bit
//   generalized_petersen(n,k) outer cycle 0..n-1, inner n+i ~ n+(i+k mod n),
//                             spokes i ~ n+i
//   petersen                  generalized_petersen(5,2)
//   mobius_kantor             generalized_petersen(8,3)
//   k4_chain(r)               cut vertices 3i (i = 0..r); block i is the K4
//                             on {3i, 3i+1, 3i+2, 3i+3}
//   join(G,H)                 G's vertices first, then H's shifted by |V(G)|
//   cartesian(G,H)            (u,v) -> u*|V(H)| + v
//   wheel(n)                  join(cycle(n), complete(1)): rim 0..n-1, hub n
//   prism(n)                  cartesian(cycle(n), path(2))

Graph complete_graph(int n);
Graph complete_bipartite_graph(int n, int m);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph hypercube_graph(int d);
Graph generalized_petersen_graph(int n, int k);
Graph petersen_graph();
Graph mobius_kantor_graph();
Graph k4_chain_graph(int r);
Graph join_graphs(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph wheel_graph(int n);
Graph prism_graph(int n);

/// Parsed form of strings like "k4_chain:2" or "cartesian:petersen,path:3".
/// Arguments are integers or nested families; "g6:<graph6>" embeds a literal.
struct FamilySpec {
  std::string name;
  std::vector<std::variant<int, FamilySpec>> args;
  std::string literal;  // only for g6
};

FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
/// Throws DomainError on nonsensical parameters.
Graph generate(const FamilySpec& spec);
Graph generate(std::string_view text);

}  // namespace ocdc

#endif  // OCDC_FAMILIES_HPP
