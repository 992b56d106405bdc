#pragma once

// Internal sparse form of c * J_{r,s}: a shifted diagonal of unimodular
// phases, applied to dense matrices in O(N^2). Not part of the public
// surface; weyl_element() materializes it densely.

#include "fqm/heisenberg.hpp"

namespace fqm {

struct SparseWeyl {
    int64_t n = 0;
    int64_t r = 0;
    int64_t s = 0;
    cd coef = 1.0; // includes the w^{r s/2} phase when built via make()

    static SparseWeyl make(WeylIndex idx, int64_t n);

    DenseMap to_dense() const;
    // out = J * x
    void left_apply(const DenseMap& x, DenseMap& out, const PhaseTable& w) const;
    // out = x * J
    void right_apply(const DenseMap& x, DenseMap& out, const PhaseTable& w) const;
};

} // namespace fqm
