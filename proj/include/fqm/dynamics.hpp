#pragma once

#include "fqm/modarith.hpp"

namespace fqm {

/// Point of the discrete torus Z_N x Z_N.
struct TorusPoint {
    int64_t q = 0;
    int64_t p = 0;
    bool operator==(const TorusPoint&) const = default;
};

/// Smallest t >= 1 with A^t = I mod N, by iterated exact multiplication.
/// N^3 bounds the group order, so exceeding it means a bug.
int64_t order_mod(const SL2Element& a);

/// The forward orbit of x under the row action (q, p) -> (q, p) A,
/// up to (excluding) the first return to x.
std::vector<TorusPoint> orbit(TorusPoint x, const SL2Element& a);

struct OrbitClass {
    TorusPoint representative;
    int64_t length = 0;
};

/// All orbits of the torus, one entry per orbit, visiting each of the
/// N^2 points exactly once. Lengths sum to N^2.
std::vector<OrbitClass> orbit_partition(const SL2Element& a);

} // namespace fqm
