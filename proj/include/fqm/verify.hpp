#pragma once

#include <string>
#include <vector>

#include "fqm/modarith.hpp"
#include "fqm/tolerance.hpp"

namespace fqm {

/// One named invariant of the suite. "skipped" marks checks that do not
/// apply at the given modulus (single-factor N has no factorization to
/// test); it does not count against all_pass.
struct InvariantResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status = Status::pass;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct VerificationReport {
    int64_t n = 0;
    int samples = 0;
    uint64_t seed = 0;
    double tolerance_scale = 0.0;
    std::vector<InvariantResult> invariants;

    bool all_pass() const;
};

/// Run the whole invariant suite at modulus N with `samples` seeded
/// random group elements where sampling is called for (exhaustive checks
/// stay exhaustive).
VerificationReport run_verification(OddModulus n, int samples, uint64_t seed,
                                    const ToleranceConfig& tol);

} // namespace fqm
