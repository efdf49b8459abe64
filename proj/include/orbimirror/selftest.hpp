#pragma once

// The exhaustive invariant suite behind `orbimirror selftest`.

#include <cstdint>

#include "orbimirror/mirror.hpp"

namespace orbimirror {

struct SelftestOptions {
  /// WDVV reconstruction plus the full residual check runs when μ is at most
  /// this; the residual scan grows like μ^4 times the number of multi-indices.
  std::int64_t wdvv_max_mu = 5;
  std::int64_t wdvv_max_length = 7;
};

/// One finding per check; a failing check records its first counterexample.
Report run_selftest(const Weights& w, const SelftestOptions& options = {});

}  // namespace orbimirror
