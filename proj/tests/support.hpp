#pragma once

#include <algorithm>

// Shared by the test files: clamp a desired clause count into the feasible
// band for n variables (coverage needs 2m >= n, the occurrence cap needs
// 2m <= 12n).
namespace mti_test {

inline int feasible_m(int n, int want) {
  return std::clamp(want, std::max(1, (n + 1) / 2), 6 * n);
}

}  // namespace mti_test
