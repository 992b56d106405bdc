#include "fqm/densemap.hpp"

#include <cmath>

#include "fqm/kernels.hpp"

namespace fqm {

DenseMap DenseMap::identity(int64_t n) {
    DenseMap m(n);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMap matmul(const DenseMap& a, const DenseMap& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("matmul: dimension mismatch");
    DenseMap c(a.dim());
    kernels::matmul(a.dim(), a.data(), b.data(), c.data());
    return c;
}

DenseMap adjoint(const DenseMap& a) {
    DenseMap r(a.dim());
    for (int64_t i = 0; i < a.dim(); ++i)
        for (int64_t j = 0; j < a.dim(); ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

DenseMap matpow(const DenseMap& a, int64_t k) {
    if (k < 0) throw Error("matpow: negative exponent");
    DenseMap acc = DenseMap::identity(a.dim());
    DenseMap base = a;
    while (k > 0) {
        if (k & 1) acc = matmul(acc, base);
        if (k >>= 1) base = matmul(base, base);
    }
    return acc;
}

std::vector<cd> matvec(const DenseMap& a, const std::vector<cd>& x) {
    if (static_cast<int64_t>(x.size()) != a.dim())
        throw DimensionMismatchError("matvec: dimension mismatch");
    std::vector<cd> y(x.size());
    kernels::matvec(a.dim(), a.data(), x.data(), y.data());
    return y;
}

double max_abs_diff(const DenseMap& a, const DenseMap& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("max_abs_diff: dimension mismatch");
    return max_abs_diff(a.values(), b.values());
}

double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("max_abs_diff: size mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const DenseMap& a) {
    double m = 0.0;
    for (const auto& v : a.values()) m = std::max(m, std::abs(v));
    return m;
}

double unitarity_residual(const DenseMap& a) {
    const DenseMap p = matmul(a, adjoint(a));
    double m = 0.0;
    for (int64_t i = 0; i < a.dim(); ++i)
        for (int64_t j = 0; j < a.dim(); ++j) {
            const cd expected = (i == j) ? cd(1.0, 0.0) : cd(0.0, 0.0);
            m = std::max(m, std::abs(p.at(i, j) - expected));
        }
    return m;
}

DenseMap kron(const DenseMap& a, const DenseMap& b) {
    const int64_t na = a.dim(), nb = b.dim();
    DenseMap r(na * nb);
    for (int64_t i = 0; i < na; ++i)
        for (int64_t j = 0; j < na; ++j) {
            const cd f = a.at(i, j);
            if (f == cd(0.0, 0.0)) continue;
            for (int64_t k = 0; k < nb; ++k)
                for (int64_t l = 0; l < nb; ++l)
                    r.at(i * nb + k, j * nb + l) = f * b.at(k, l);
        }
    return r;
}

namespace {
size_t argmax_abs(const std::vector<cd>& v) {
    size_t best = 0;
    double mag = -1.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const double m = std::abs(v[i]);
        if (m > mag) {
            mag = m;
            best = i;
        }
    }
    return best;
}
} // namespace

double phase_aligned_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("phase_aligned_diff: size mismatch");
    const size_t anchor = argmax_abs(a);
    const cd pa = a[anchor], pb = b[anchor];
    if (std::abs(pa) == 0.0 || std::abs(pb) == 0.0) return max_abs_diff(a, b);
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] / pa - b[i] / pb));
    return m;
}

double phase_aligned_diff(const DenseMap& a, const DenseMap& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("phase_aligned_diff: dimension mismatch");
    return phase_aligned_diff(a.values(), b.values());
}

std::pair<double, cd> scalar_multiple_of_identity(const DenseMap& a) {
    const int64_t n = a.dim();
    cd tr = 0.0;
    for (int64_t i = 0; i < n; ++i) tr += a.at(i, i);
    const cd c = tr / static_cast<double>(n);
    double m = 0.0;
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j) {
            const cd expected = (i == j) ? c : cd(0.0, 0.0);
            m = std::max(m, std::abs(a.at(i, j) - expected));
        }
    return {m, c};
}

} // namespace fqm
