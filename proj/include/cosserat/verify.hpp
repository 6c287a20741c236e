#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cosserat {

struct CheckResult {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// A measured property worth reporting that is not a pass/fail invariant:
/// places where the implemented formulas behave differently from their
/// naive reading. Findings never fail a verification run.
struct Finding {
    std::string id;
    std::string description;
    double measured = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<Finding> findings;
    bool all_pass = false;
};

/// Runs the invariant suite named by `suite`: one of tensor, energy,
/// dispersion, soliton, simulate, all. tolerance_scale != 1 shrinks every
/// tolerance (a harness self-test hook: scale 0 must fail).
VerifyReport verify_suite(const std::string& suite, std::uint64_t seed,
                          double tolerance_scale = 1.0);

}  // namespace cosserat
