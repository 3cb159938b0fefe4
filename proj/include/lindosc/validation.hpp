#pragma once

#include <string>
#include <vector>

#include "lindosc/dynamics.hpp"

// Deterministic self-check battery: internal identities, transform
// consistency, closed form vs numerics, and closure of the moment dynamics
// against the pointwise transport solution. Everything is seeded; repeated
// runs produce identical results.

namespace lindosc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Closure of a moment system against the transport-equation solution: the
// characteristic function predicted by propagating moments through
// sys.drift/sys.drive is compared pointwise with the directly integrated
// transport solution for sys.params. The transport side reads only
// sys.params, the moment side only the matrices, so a corrupted drift is
// caught. Passes when the maximum pointwise gap is below tol.
CheckResult characteristics_closure_check(const MomentSystem& sys, const InitialConditions& ic,
                                          double t, double tol);

std::vector<CheckResult> run_validation_suite();

}  // namespace lindosc
