#include "fqm/dynamics.hpp"

#include <tuple>

namespace fqm {

int64_t order_mod(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    const int64_t bound = n * n * n;
    const SL2Element id = SL2Element::identity(a.modulus());
    SL2Element p = a;
    for (int64_t t = 1; t <= bound; ++t) {
        if (p == id) return t;
        p = p * a;
    }
    throw Error("order_mod: order exceeds the group order bound N^3");
}

std::vector<TorusPoint> orbit(TorusPoint x, const SL2Element& a) {
    const int64_t n = a.modulus().value();
    if (x.q < 0 || x.q >= n || x.p < 0 || x.p >= n)
        throw OutOfRangeError("orbit: point outside [0, N)^2");
    std::vector<TorusPoint> points{x};
    auto [q, p] = a.act_row(x.q, x.p);
    while (!(q == x.q && p == x.p)) {
        points.push_back({q, p});
        std::tie(q, p) = a.act_row(q, p);
    }
    return points;
}

std::vector<OrbitClass> orbit_partition(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    std::vector<char> visited(static_cast<size_t>(n) * n, 0);
    std::vector<OrbitClass> classes;
    for (int64_t q0 = 0; q0 < n; ++q0)
        for (int64_t p0 = 0; p0 < n; ++p0) {
            if (visited[q0 * n + p0]) continue;
            int64_t length = 0;
            int64_t q = q0, p = p0;
            do {
                visited[q * n + p] = 1;
                ++length;
                std::tie(q, p) = a.act_row(q, p);
            } while (!(q == q0 && p == p0));
            classes.push_back({{q0, p0}, length});
        }
    return classes;
}

} // namespace fqm
