#ifndef OCDC_ORIENT_HPP
#define OCDC_ORIENT_HPP

#include <vector>

#include "ocdc/cover.hpp"

namespace ocdc {

/// One link in an infeasibility witness: `edge` is shared by cycle `cycle`
/// and the next step's cycle, with constraint parity `parity`.
struct ParityStep {
  int cycle = 0;
  Edge edge;
  int parity = 0;
};

struct OrientOutcome {
  bool feasible = false;
  std::vector<DirectedCycle> cycles;  // oriented, same order as the input
  std::vector<int> flips;             // 1 where the input cycle was reversed
  std::vector<ParityStep> witness;    // closed constraint chain, parities sum to 1
};

/// Orient a CDC into an OCDC if possible.
///
/// Each input cycle's vertex order is its reference direction. An edge e in
/// cycles i and j imposes flip(i) xor flip(j) = b(e), where b(e) = 1 iff both
/// traverse e the same way. The system is solved with a parity union-find.
/// Duplicate cycles are separate variables. Throws PreconditionError when the
/// input is not a CDC.
OrientOutcome orient_cdc(const Graph& g, const std::vector<DirectedCycle>& cdc);

/// Sum of witness parities mod 2 (1 for a genuine infeasibility proof).
int witness_parity(const std::vector<ParityStep>& witness);

/// Both directions of every cycle of an edge-partition into cycles.
std::vector<DirectedCycle> double_cycle_decomposition(const Graph& g, const std::vector<DirectedCycle>& decomposition);

/// girth > average degree, which forces every OCDC to be small. Throws
/// std::logic_error if it holds yet `ocdc` is larger than n - 1.
bool small_by_girth(const Graph& g, const std::vector<DirectedCycle>& ocdc);

/// |cdc| <= n/2 + 2 for a cubic host (DomainError otherwise).
bool cubic_bound_check(const Graph& g, const std::vector<DirectedCycle>& cdc);

}  // namespace ocdc

#endif  // OCDC_ORIENT_HPP
