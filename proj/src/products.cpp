#include "ocdc/products.hpp"

#include <stdexcept>

#include "ocdc/compose.hpp"
#include "ocdc/error.hpp"
#include "ocdc/families.hpp"
#include "ocdc/structure.hpp"

namespace ocdc {

LiftFactor classify_factor(const Graph& h) {
  const int n = h.order();
  if (n >= 2 && is_connected(h)) {
    if (h.size() == n - 1) return h.max_degree() <= 2 ? LiftFactor::Path : LiftFactor::Tree;
    if (h.size() == n && h.is_regular(2)) return n % 2 == 0 ? LiftFactor::EvenCycle : LiftFactor::OddCycle;
  }
  throw DomainError("product factor must be a path, a tree or a cycle");
}

namespace {

const CoverCertificate& need(const std::optional<CoverCertificate>& c, const Graph& g, bool paths, const char* what) {
  if (!c) throw PreconditionError(std::string("product_lift needs ") + what + " of G");
  if (uses_cycles(c->kind) == paths) throw PreconditionError(std::string("product_lift: wrong kind for ") + what);
  const VerifyReport r = paths ? verify_oppdc(c->host, c->paths()) : verify_socdc(c->host, c->cycles());
  if (!r.ok) throw PreconditionError(std::string("product_lift: ") + what + " does not verify");
  if (!(c->host == g)) throw PreconditionError("product_lift: covers are for different graphs");
  return *c;
}

SearchOutcome explicit_outcome(CoverCertificate c) {
  SearchOutcome out;
  out.status = SearchStatus::Found;
  out.lower_bound = 0;
  out.certificate = std::move(c);
  return out;
}

}  // namespace

SearchOutcome product_lift(const LiftInputs& in, const Graph& factor, const SearchOptions& opt) {
  const LiftFactor kind = classify_factor(factor);
  const Graph& g = in.oppdc ? in.oppdc->host : in.socdc ? in.socdc->host : throw PreconditionError("product_lift needs a cover of G");
  switch (kind) {
    case LiftFactor::Path:
      if (factor.order() == 2) return explicit_outcome(prism_p2(need(in.oppdc, g, true, "an OPPDC")));
      need(in.socdc, g, false, "an SOCDC");
      break;
    case LiftFactor::Tree:
      need(in.oppdc, g, true, "an OPPDC");
      need(in.socdc, g, false, "an SOCDC");
      break;
    case LiftFactor::EvenCycle:
    case LiftFactor::OddCycle:
      if (kind == LiftFactor::EvenCycle && !in.socdc) {
        need(in.oppdc, g, true, "an OPPDC");
      } else {
        const CoverCertificate& s = need(in.socdc, g, false, "an SOCDC");
        if (factor.order() >= 2 * g.order() + 1) {
          // cycle_graph numbering matches the factor only if it is cycle(n)
          if (factor == cycle_graph(factor.order())) return explicit_outcome(product_cycle_large(s, factor.order()).certificate);
        }
      }
      break;
  }
  const Graph product = cartesian_product(g, factor);
  SearchOutcome out = find_socdc(product, opt);
  if (out.status == SearchStatus::NoneExists)
    throw std::logic_error("search found no SOCDC of a product that is guaranteed to have one");
  if (out.certificate) out.certificate->provenance = "product_lift(search)";
  return out;
}

}  // namespace ocdc
