#ifndef OCDC_COMPOSE_HPP
#define OCDC_COMPOSE_HPP

#include <vector>

#include "ocdc/cover.hpp"

namespace ocdc {

// Surgeries building covers of a whole graph from covers of its pieces.
// Every function verifies its inputs and its output; a result holding more
// than n - 1 cycles is returned with kind OCDC, otherwise SOCDC.

/// Identification of piece vertices with whole-graph vertices. An entry of
/// -1 marks the contracted vertex w of a 3-edge-cut piece.
struct MergeSpec {
  std::vector<Vertex> map1;
  std::vector<Vertex> map2;
};

/// Pieces share exactly one vertex. Count |c1| + |c2|.
CoverCertificate merge_at_cutvertex(const CoverCertificate& c1, const CoverCertificate& c2, const MergeSpec& spec);

/// Insert a new vertex (id n) on edge uv; count unchanged.
CoverCertificate subdivide(const CoverCertificate& c, Edge uv);

enum class TwoCutMode { SharedEdge, NoEdge };

/// c1, c2 cover G1 + v1v2 and G2 + v1v2, which meet exactly in {v1, v2}
/// (whole-graph ids). SharedEdge keeps v1v2 in the result and splices one
/// pair of cycles (count |c1| + |c2| - 1); NoEdge drops it and splices both
/// pairs (count |c1| + |c2| - 2).
CoverCertificate merge_2cut(const CoverCertificate& c1, const CoverCertificate& c2, const MergeSpec& spec, Vertex v1,
                            Vertex v2, TwoCutMode mode);

/// Explicit covers for 2-cuts where a piece is K4 or K6.
///
/// For the table cases `labels[i]` is the whole-graph id of v_{i+1}, with
/// G1 on v1..v4 (or v1..v6) and G2 on v1, v2 and the remaining labels; the
/// edge v1v2 is absent. For the *Edge cases `labels` names the clique's
/// v1..v4 (or v1..v6), the edge v1v2 stays, and `other` is a cover of
/// G2 + v1v2 mapped into the whole graph by `other_map`.
enum class SpecialTwoCut { K4K4, K4K6, K6K6, K4Edge, K6Edge };
CoverCertificate merge_2cut_special(SpecialTwoCut which, const std::vector<Vertex>& labels,
                                    const CoverCertificate* other = nullptr, const std::vector<Vertex>* other_map = nullptr);

/// Endpoint patterns of a 3-edge cut between G1 (u's) and G2 (v's):
///   DistinctEndpoints  u1v1, u2v2, u3v3
///   SharedTail         u1v1, u1v2, u2v3
///   SharedBoth         u1v1, u1v2, u2v2
enum class ThreeCutPattern { DistinctEndpoints, SharedTail, SharedBoth };

/// c1, c2 are OCDCs of H1 = G1 + w1 and H2 = G2 + w2 where w_i replaces the
/// far side (map entry -1) and is adjacent to exactly the cut endpoints on
/// its side. `u`, `v` are whole-graph ids. Counts |c1| + |c2| - 3, -2, -1.
CoverCertificate merge_3edgecut(const CoverCertificate& c1, const CoverCertificate& c2, const MergeSpec& spec,
                                ThreeCutPattern pattern, const std::vector<Vertex>& u, const std::vector<Vertex>& v);

/// OPPDC of G -> SOCDC of G v K1 (apex id n): path (v1..vk) -> [w, v1..vk].
CoverCertificate join_apex(const CoverCertificate& oppdc);
/// SOCDC of G v K1 -> OPPDC of G; vertices above `apex` shift down by one.
CoverCertificate strip_apex(const CoverCertificate& socdc, Vertex apex);

/// OPPDC of G -> SOCDC of G x P2 with |V(G)| cycles; vertex (u, layer) is
/// 2u + layer.
CoverCertificate prism_p2(const CoverCertificate& oppdc);

struct FlaggedCover {
  CoverCertificate certificate;
  bool bound_violation = false;
};

/// SOCDC of G and n >= 2|V(G)| + 1 -> SOCDC of G x C_n (vertex (u, i) is
/// u*n + i): the cover in every layer plus each column cycle both ways.
/// Below the threshold the cover is still produced and flagged.
FlaggedCover product_cycle_large(const CoverCertificate& socdc, int n);

}  // namespace ocdc

#endif  // OCDC_COMPOSE_HPP
