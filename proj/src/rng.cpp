#include "fqm/rng.hpp"

namespace fqm {

SL2Element random_sl2(Rng& rng, OddModulus n) {
    const int64_t N = n.value();
    SL2Element acc = SL2Element::identity(n);
    for (int round = 0; round < 4; ++round) {
        acc = acc * SL2Element(1, rng.below(N), 0, 1, n);
        acc = acc * SL2Element(1, 0, rng.below(N), 1, n);
    }
    if (rng.below(2) == 1) acc = acc * SL2Element::rotation(n);
    return acc;
}

std::vector<cd> random_vector(Rng& rng, int64_t n) {
    std::vector<cd> v(n);
    for (auto& x : v) x = rng.unit_complex();
    return v;
}

std::vector<SL2Element> enumerate_sl2(OddModulus n) {
    const int64_t N = n.value();
    std::vector<SL2Element> out;
    for (int64_t a = 0; a < N; ++a)
        for (int64_t b = 0; b < N; ++b)
            for (int64_t c = 0; c < N; ++c)
                for (int64_t d = 0; d < N; ++d)
                    if (sub_mod(mul_mod(a, d, N), mul_mod(b, c, N), N) == 1)
                        out.emplace_back(a, b, c, d, n);
    return out;
}

} // namespace fqm
