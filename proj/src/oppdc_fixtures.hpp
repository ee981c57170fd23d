#ifndef OCDC_OPPDC_FIXTURES_HPP
#define OCDC_OPPDC_FIXTURES_HPP

#include <vector>

namespace ocdc::detail {

// OPPDCs of K7, K9 and K11 found offline by tools/make_fixtures.
struct OppdcFixture {
  int n;
  const char* provenance;
  std::vector<std::vector<int>> paths;
};

const std::vector<OppdcFixture>& oppdc_fixtures();

}  // namespace ocdc::detail

#endif  // OCDC_OPPDC_FIXTURES_HPP
