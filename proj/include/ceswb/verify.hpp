#pragma once

#include <string>
#include <vector>

namespace ceswb {

struct GateResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int n = 2;
  int bound = 6;
  int jobs = 1;
  /// Name of a gate whose reference data is deliberately perturbed (fault injection).
  std::string corrupt_gate;
};

/// Gate names in run order.
const std::vector<std::string>& gate_names();

/// Runs every cross-check gate at rank n; each gate reports independently.
std::vector<GateResult> run_verification(const VerifyOptions& opts);

}  // namespace ceswb
