#pragma once

#include <utility>
#include <vector>

#include "epos/efunction.hpp"

namespace fixtures {

// The known expansion of X for S(6,2,1), term by term.
inline const std::vector<std::pair<std::vector<int>, int>> kSpider621Table{
    {{10}, 10},         {{9, 1}, 17},          {{8, 2}, 22},          {{8, 1, 1}, 7},       {{7, 3}, 11},
    {{7, 2, 1}, 24},    {{6, 4}, 38},          {{6, 3, 1}, 32},       {{6, 2, 2}, 26},      {{6, 2, 1, 1}, 5},
    {{5, 5}, 20},       {{5, 4, 1}, 55},       {{5, 3, 2}, 37},       {{5, 3, 1, 1}, 16},   {{5, 2, 2, 1}, 20},
    {{4, 4, 2}, 42},    {{4, 4, 1, 1}, 9},     {{4, 3, 3}, 1},        {{4, 3, 2, 1}, 59},   {{4, 2, 2, 2}, 22},
    {{4, 2, 2, 1, 1}, 3}, {{3, 3, 3, 1}, 8},   {{3, 3, 2, 2}, 9},     {{3, 3, 2, 1, 1}, 8}, {{3, 2, 2, 2, 1}, 9},
    {{2, 2, 2, 2, 2}, 2},
};

inline epos::EFunction spider621() {
  epos::EFunction f;
  for (const auto& [parts, c] : kSpider621Table) f.add_term(epos::Partition(parts), c);
  return f;
}

}  // namespace fixtures
