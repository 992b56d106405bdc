#pragma once

#include <random>

#include "fqm/densemap.hpp"
#include "fqm/modarith.hpp"

namespace fqm {

/// Deterministic sampling. mt19937_64 with plain modulo reduction: not
/// uniform to the last ulp, but identical on every platform, which is
/// what verification runs need.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    int64_t below(int64_t bound) {
        return static_cast<int64_t>(next() % static_cast<uint64_t>(bound));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    cd unit_complex() { return cd(2.0 * unit() - 1.0, 2.0 * unit() - 1.0); }

private:
    std::mt19937_64 engine_;
};

/// Random element of SL(2, Z_N): a product of upper and lower shear
/// generators with random powers, which reaches the whole group.
SL2Element random_sl2(Rng& rng, OddModulus n);

std::vector<cd> random_vector(Rng& rng, int64_t n);

/// All elements of SL(2, Z_N) by exhaustive scan; meant for small N
/// (the scan is N^4).
std::vector<SL2Element> enumerate_sl2(OddModulus n);

} // namespace fqm
