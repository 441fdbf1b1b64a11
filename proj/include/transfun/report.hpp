#pragma once

#include <string>

namespace transfun {

/// Outcome of a sampling check. Samplers certify counterexamples, never
/// universal truth: pass means no counterexample was found in `trials` draws.
struct CheckReport {
  std::string name;
  bool pass = true;
  int trials = 0;
  double worst = 0.0;           // largest deviation observed
  std::string counterexample;   // description of the first failure, if any

  void fail(std::string description) {
    if (pass) counterexample = std::move(description);
    pass = false;
  }
};

}  // namespace transfun
