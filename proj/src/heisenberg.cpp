#include "fqm/heisenberg.hpp"

#include <cmath>
#include <numbers>

#include "sparse_weyl.hpp"

namespace fqm {

PhaseTable::PhaseTable(int64_t n) : n_(n), w_(n) {
    for (int64_t t = 0; t < n; ++t) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
        w_[t] = cd(std::cos(angle), std::sin(angle));
    }
}

std::pair<DenseMap, DenseMap> clock_shift(OddModulus n) {
    const int64_t N = n.value();
    const PhaseTable w(N);
    DenseMap q(N), p(N);
    for (int64_t j = 0; j < N; ++j) {
        q.at(j, j) = w(j);
        p.at(j, canonical_mod(j - 1, N)) = 1.0;
    }
    return {std::move(q), std::move(p)};
}

SparseWeyl SparseWeyl::make(WeylIndex idx, int64_t n) {
    SparseWeyl jw;
    jw.n = n;
    jw.r = canonical_mod(idx.r, n);
    jw.s = canonical_mod(idx.s, n);
    const PhaseTable w(n);
    jw.coef = w(mul_mod(mul_mod(jw.r, jw.s, n), half_mod(n), n));
    return jw;
}

DenseMap SparseWeyl::to_dense() const {
    const PhaseTable w(n);
    DenseMap m(n);
    for (int64_t i = 0; i < n; ++i) {
        const int64_t j = canonical_mod(i - r, n);
        m.at(i, j) = coef * w(mul_mod(j, s, n));
    }
    return m;
}

void SparseWeyl::left_apply(const DenseMap& x, DenseMap& out, const PhaseTable& w) const {
    // (J x)[i][j] = coef * w^{(i-r) s} * x[i-r][j]
    for (int64_t i = 0; i < n; ++i) {
        const int64_t src = canonical_mod(i - r, n);
        const cd f = coef * w(mul_mod(src, s, n));
        for (int64_t j = 0; j < n; ++j) out.at(i, j) = f * x.at(src, j);
    }
}

void SparseWeyl::right_apply(const DenseMap& x, DenseMap& out, const PhaseTable& w) const {
    // (x J)[i][j] = coef * w^{j s} * x[i][j+r]
    for (int64_t j = 0; j < n; ++j) {
        const int64_t src = canonical_mod(j + r, n);
        const cd f = coef * w(mul_mod(j, s, n));
        for (int64_t i = 0; i < n; ++i) out.at(i, j) = f * x.at(i, src);
    }
}

DenseMap weyl_element(WeylIndex idx, OddModulus n) {
    return SparseWeyl::make(idx, n.value()).to_dense();
}

DenseMap fourier_basis(OddModulus n) {
    const int64_t N = n.value();
    const PhaseTable w(N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    DenseMap f(N);
    for (int64_t col = 0; col < N; ++col) {
        const int64_t k = col + 1; // columns ordered k = 1..N
        for (int64_t l = 0; l < N; ++l) f.at(l, col) = scale * w(mul_mod(k, l, N));
    }
    return f;
}

} // namespace fqm
