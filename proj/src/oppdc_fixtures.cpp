// Generated by tools/make_fixtures. Do not edit.
#include "oppdc_fixtures.hpp"

namespace ocdc::detail {

const std::vector<OppdcFixture>& oppdc_fixtures() {
  static const std::vector<OppdcFixture> table = {
      {7, "find_oppdc(K7)", {
          {0, 1, 2, 3, 4, 5, 6},
          {1, 3, 2, 0, 4, 6, 5},
          {2, 1, 0, 5, 3, 6, 4},
          {3, 5, 0, 6, 2, 4, 1},
          {4, 0, 2, 5, 1, 6, 3},
          {5, 2, 6, 1, 4, 3, 0},
          {6, 0, 3, 1, 5, 4, 2},
      }},
      {9, "find_oppdc(K9)", {
          {0, 1, 2, 3, 4, 5, 6, 7, 8},
          {1, 3, 2, 0, 4, 6, 5, 8, 7},
          {2, 4, 1, 0, 3, 7, 6, 8, 5},
          {3, 0, 5, 1, 7, 4, 2, 8, 6},
          {4, 0, 6, 1, 5, 7, 3, 8, 2},
          {5, 4, 3, 6, 2, 7, 0, 8, 1},
          {6, 3, 5, 0, 7, 2, 1, 8, 4},
          {7, 1, 6, 4, 8, 0, 2, 5, 3},
          {8, 3, 1, 4, 7, 5, 2, 6, 0},
      }},
      {11, "find_oppdc_sequential(K11)", {
          {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
          {1, 0, 2, 4, 3, 5, 7, 6, 8, 10, 9},
          {2, 0, 3, 1, 4, 6, 5, 9, 7, 10, 8},
          {3, 0, 4, 1, 5, 2, 9, 8, 6, 10, 7},
          {4, 0, 5, 1, 3, 8, 7, 9, 2, 10, 6},
          {5, 0, 6, 9, 1, 7, 2, 8, 3, 10, 4},
          {6, 0, 7, 1, 8, 4, 9, 5, 10, 3, 2},
          {7, 0, 8, 5, 3, 9, 4, 10, 2, 6, 1},
          {8, 1, 10, 0, 9, 6, 3, 7, 4, 2, 5},
          {9, 0, 10, 5, 8, 2, 1, 6, 4, 7, 3},
          {10, 1, 9, 3, 6, 2, 7, 5, 4, 8, 0},
      }},
  };
  return table;
}

}  // namespace ocdc::detail
