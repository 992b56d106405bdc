#pragma once

#include <cstdint>

namespace fqm {

/// Numerical tolerances. Matrix-level checks scale with the dimension:
/// tau(N) = matrix_tol_scale * N. FQM_TOLERANCE_SCALE in the environment
/// overrides matrix_tol_scale.
struct ToleranceConfig {
    double entry_tol = 1e-9;
    double matrix_tol_scale = 1e-9;

    double tau(int64_t n) const { return matrix_tol_scale * static_cast<double>(n); }

    static ToleranceConfig from_env();
};

} // namespace fqm
