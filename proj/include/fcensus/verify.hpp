#pragma once

// The acceptance checks, runnable from the CLI, the acceptance binary and
// Python. Each check recomputes its numbers from scratch.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fcensus {

enum class VerifyStatus { kPass, kFail, kExpectedBandMiss };

std::string_view verify_status_name(VerifyStatus s);

struct VerifyOutcome {
  std::string id;
  VerifyStatus status = VerifyStatus::kFail;
  nlohmann::ordered_json observed;
  nlohmann::ordered_json expected;
  std::string tolerance;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  bool full = false;
  /// Worker count for the multi-worker half of the determinism check.
  unsigned workers = 0;  // 0: max(2, hardware threads)
  std::uint64_t seed = 1;
  /// Negative controls: perturb one closed form so the matching check must
  /// fail.
  bool tamper_c_inf = false;
  bool tamper_exact_n2 = false;
};

/// The criteria every suite runs, in order.
const std::vector<std::string>& acceptance_check_ids();
/// Extra diagnostics run only by the full suite.
const std::vector<std::string>& diagnostic_check_ids();

/// Throws kOutOfRange for an unknown id.
VerifyOutcome run_check(const std::string& id, const VerifyOptions& options = {});

std::vector<VerifyOutcome> run_suite(const VerifyOptions& options,
                                     const std::function<void(const VerifyOutcome&)>& on_outcome = {});

nlohmann::ordered_json to_json(const VerifyOutcome& o);

}  // namespace fcensus
