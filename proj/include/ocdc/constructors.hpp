#ifndef OCDC_CONSTRUCTORS_HPP
#define OCDC_CONSTRUCTORS_HPP

#include <optional>
#include <vector>

#include "ocdc/cover.hpp"
#include "ocdc/embedding.hpp"
#include "ocdc/search.hpp"

namespace ocdc {

// Closed-form builders. Every result is verified before it is returned.

/// K4 cover [0,1,3],[1,0,2],[2,3,1],[3,2,0] (v_i -> i-1). Kind OCDC.
CoverCertificate ocdc_k4();
/// The six-cycle cover of K6 (v_i -> i-1). Kind OCDC.
CoverCertificate ocdc_k6();

/// K_n, n odd >= 3: the rotational Hamiltonian decomposition (fixed vertex
/// n-1, zigzag 0, 1, n-2, 2, n-3, ... turned through Z_{n-1}), each cycle
/// taken in both directions. n - 1 cycles.
CoverCertificate socdc_complete_odd(int n);

/// K_n, n even >= 8: join_apex of an OPPDC of K_{n-1}. Cached certificates
/// cover K7, K9, K11; larger orders run find_oppdc_sequential under `opt`
/// and throw Unresolved when it does not finish. NoSocdcExists for n = 4, 6.
CoverCertificate socdc_complete_even(int n, const SearchOptions& opt = {});

/// Cached OPPDC of K_n for n in {7, 9, 11}; nullopt otherwise.
std::optional<CoverCertificate> cached_complete_oppdc(int n);

/// K_{n,m}, 2 <= n <= m, left v_j = j-1, right w_t = n+t-1:
/// C_i = [v1, w_i, v2, w_{i+1}, ..., vn, w_{i+n-1}], subscripts mod m.
CoverCertificate socdc_complete_bipartite(int n, int m);

struct PlanarCover {
  CoverCertificate certificate;
  bool bound_violation = false;  // |E| >= 2|V| - 2
  bool split = false;            // some face walk repeated a vertex
};

/// Face walks of a genus-0 rotation as directed cycles. Throws
/// NotPlanarEmbedding when the face count is not 2 + |E| - |V|.
PlanarCover socdc_planar(const Graph& g, const RotationSystem& rot);

/// Proper 3-edge-coloring, color of edges()[i] in {0, 1, 2}.
struct EdgeColoring3 {
  std::vector<int> color;
};

enum class ColoringVerdict { Colored, Class2, Unknown };

struct ColoringResult {
  ColoringVerdict verdict = ColoringVerdict::Unknown;
  std::optional<EdgeColoring3> coloring;
  std::uint64_t nodes = 0;
};

/// Kempe-chain greedy, then exhaustive backtracking. Class2 is reported only
/// for n <= 20; larger failures are Unknown. DomainError if not cubic.
ColoringResult edge_color_cubic(const Graph& g, std::uint64_t node_limit = 50'000'000);
bool is_proper_3_edge_coloring(const Graph& g, const EdgeColoring3& c);

/// The CDC {M0 u M1, M0 u M2, M1 u M2} of 2-factors of a 3-edge-coloring.
std::vector<DirectedCycle> two_factor_cdc(const Graph& g, const EdgeColoring3& c);

struct CubicCover {
  CoverCertificate certificate;
  bool from_two_factors = true;  // false: the 2-factor CDC did not orient
  std::vector<ParityStep> witness;
};

/// Orient the 2-factor CDC. When its parity system is infeasible (K4 is the
/// smallest case) an OCDC is obtained by find_ocdc instead and the witness is
/// kept. PreconditionError if `coloring` is not proper; DomainError if no
/// coloring is given and none is found.
CubicCover ocdc_cubic_class1(const Graph& g, const std::optional<EdgeColoring3>& coloring = std::nullopt,
                             const SearchOptions& opt = {});

}  // namespace ocdc

#endif  // OCDC_CONSTRUCTORS_HPP
