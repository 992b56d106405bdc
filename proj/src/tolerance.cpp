#include "fqm/tolerance.hpp"

#include <cstdlib>
#include <string>

namespace fqm {

ToleranceConfig ToleranceConfig::from_env() {
    ToleranceConfig cfg;
    if (const char* s = std::getenv("FQM_TOLERANCE_SCALE")) {
        try {
            const double v = std::stod(s);
            if (v > 0.0) cfg.matrix_tol_scale = v;
        } catch (...) {
            // ignore malformed values, keep the default
        }
    }
    return cfg;
}

} // namespace fqm
