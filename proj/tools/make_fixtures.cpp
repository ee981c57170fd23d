// Regenerates src/oppdc_fixtures.cpp: OPPDCs of K7 and K9 by exact cover,
// K11 by the sequential path search (its Hamiltonian paths are too many to
// tabulate as exact-cover rows).
#include <cstdio>

#include "ocdc/families.hpp"
#include "ocdc/search.hpp"

int main() {
  using namespace ocdc;
  std::printf("// Generated by tools/make_fixtures. Do not edit.\n");
  std::printf("#include \"oppdc_fixtures.hpp\"\n\nnamespace ocdc::detail {\n\n");
  std::printf("const std::vector<OppdcFixture>& oppdc_fixtures() {\n  static const std::vector<OppdcFixture> table = {\n");
  for (int n : {7, 9, 11}) {
    SearchOptions opt;
    opt.budget.node_limit = 10'000'000;
    const Graph g = complete_graph(n);
    const SearchOutcome s = n <= 9 ? find_oppdc(g, opt) : find_oppdc_sequential(g, opt);
    if (s.status != SearchStatus::Found) {
      std::fprintf(stderr, "K%d: %s\n", n, to_string(s.status).c_str());
      return 1;
    }
    std::printf("      {%d, \"%s(K%d)\", {\n", n, s.certificate->provenance.c_str(), n);
    for (const auto& p : s.certificate->paths()) {
      std::printf("          {");
      for (std::size_t i = 0; i < p.vertices().size(); ++i) std::printf("%s%d", i ? ", " : "", p.vertices()[i]);
      std::printf("},\n");
    }
    std::printf("      }},\n");
  }
  std::printf("  };\n  return table;\n}\n\n}  // namespace ocdc::detail\n");
  return 0;
}
