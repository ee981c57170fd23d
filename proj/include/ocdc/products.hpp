#ifndef OCDC_PRODUCTS_HPP
#define OCDC_PRODUCTS_HPP

#include <optional>

#include "ocdc/cover.hpp"
#include "ocdc/search.hpp"

namespace ocdc {

enum class LiftFactor { Path, Tree, EvenCycle, OddCycle };

/// Path (order >= 2), other tree, even cycle or odd cycle; DomainError else.
LiftFactor classify_factor(const Graph& h);

/// Covers of G that the product statements take as hypotheses.
struct LiftInputs {
  std::optional<CoverCertificate> oppdc;
  std::optional<CoverCertificate> socdc;
};

/// SOCDC of G x H for a path, tree or cycle H, given the covers of G the
/// matching statement assumes:
///   P2            OPPDC            prism_p2
///   Pn, n >= 3    SOCDC            search
///   tree          OPPDC and SOCDC  search
///   C_2k          OPPDC            search
///   C_n odd       SOCDC            product_cycle_large when n >= 2|V|+1,
///                                  search otherwise (also for even n)
/// Search runs find_socdc on the product under `opt`; exhausting the budget
/// gives Unresolved. A proof of nonexistence would contradict the statement
/// and throws std::logic_error. PreconditionError when a required cover is
/// missing, does not verify, or covers another graph.
SearchOutcome product_lift(const LiftInputs& in, const Graph& factor, const SearchOptions& opt = {});

}  // namespace ocdc

#endif  // OCDC_PRODUCTS_HPP
