#ifndef OCDC_SEARCH_HPP
#define OCDC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocdc/cover.hpp"
#include "ocdc/exact_cover.hpp"
#include "ocdc/orient.hpp"

namespace ocdc {

/// Every simple directed cycle of G_s once, starting at its smallest vertex,
/// ordered by length then lexicographically.
std::vector<DirectedCycle> enumerate_directed_cycles(const Graph& g, std::optional<int> max_len = std::nullopt);
/// One reference direction per undirected cycle (second vertex < last).
std::vector<DirectedCycle> enumerate_undirected_cycles(const Graph& g, std::optional<int> max_len = std::nullopt);
/// Every simple directed path with at least one arc, ordered by arc count
/// then lexicographically.
std::vector<DirectedPath> enumerate_directed_paths(const Graph& g, std::optional<int> max_arcs = std::nullopt);

struct SearchOptions {
  SearchBudget budget;
  std::optional<int> max_len;   // cycle length cap (default |V|)
  std::optional<std::uint64_t> seed;  // shuffle candidate order reproducibly
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unresolved;
  std::optional<CoverCertificate> certificate;
  int lower_bound = 0;  // proven: no cover with fewer elements
  std::uint64_t nodes_expanded = 0;
  SearchBudget budget;
  bool timed_out = false;
};

std::string to_string(SearchStatus s);

/// Minimum OCDC with at most max_count cycles, by iterative deepening from
/// ceil(2|E| / longest cycle). NoneExists means no OCDC of size <= max_count.
/// Throws DomainError on a graph with a bridge.
SearchOutcome min_ocdc(const Graph& g, int max_count, const SearchOptions& opt = {});
/// Any OCDC, optionally bounded in size.
SearchOutcome find_ocdc(const Graph& g, std::optional<int> max_count, const SearchOptions& opt = {});
/// An OCDC with at most |V| - 1 cycles.
SearchOutcome find_socdc(const Graph& g, const SearchOptions& opt = {});

/// OPPDC by exact cover over arcs plus one start and one end slot per
/// vertex. Paths have at least one arc unless the graph is K1.
SearchOutcome find_oppdc(const Graph& g, const SearchOptions& opt = {});
/// OPPDC by building one path per start vertex in turn (path k starts at k)
/// over the arcs still unused. Exhaustive without a seed; a seed shuffles
/// the neighbor order. Needs no path table, so it reaches hosts like K11
/// whose Hamiltonian paths are too many to list.
SearchOutcome find_oppdc_sequential(const Graph& g, const SearchOptions& opt = {});
/// The same question answered through find_socdc(G v K1) and strip_apex.
SearchOutcome find_oppdc_via_apex(const Graph& g, const SearchOptions& opt = {});

struct UnorientableOutcome {
  SearchStatus status = SearchStatus::Unresolved;  // Found = witness produced
  std::vector<DirectedCycle> cdc;
  std::vector<ParityStep> witness;
  std::uint64_t cdcs_examined = 0;
  std::uint64_t nodes_expanded = 0;
};

/// Enumerate CDCs (edges need 2, undirected cycles may repeat) until one
/// fails orient_cdc. NoneExists = every CDC within the cycle cap orients.
UnorientableOutcome find_unorientable_cdc(const Graph& g, const SearchOptions& opt = {});

/// Enumerate all CDCs (as multisets of undirected cycles).
ExactCoverResult for_each_cdc(const Graph& g, const SearchOptions& opt,
                              const std::function<bool(const std::vector<DirectedCycle>&)>& visit);

struct FilterViolation {
  std::string condition;
  std::string detail;
};

/// Necessary conditions for a minimal counterexample to the small oriented
/// cover conjecture that g fails. Empty = g is a candidate.
std::vector<FilterViolation> counterexample_filter(const Graph& g);

}  // namespace ocdc

#endif  // OCDC_SEARCH_HPP
