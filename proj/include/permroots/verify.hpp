#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace permroots {

struct VerifyOptions {
  std::uint64_t max_n = 5;
  std::vector<std::uint64_t> ks = {2};
  unsigned workers = 1;
};

/// Outcome of the exhaustive three-way check (brute-force oracle vs.
/// closed-form counts vs. series coefficients) over every cycle type of every
/// n <= max_n, for every requested k.
struct VerifyReport {
  bool ok = true;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  /// Deterministic report: independent of the worker count.
  std::string text;
  double elapsed_seconds = 0.0;
};

/// Runs the check, partitioning the cycle types across workers. Results and
/// report text are identical for any worker count.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace permroots
