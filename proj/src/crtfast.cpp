#include "fqm/crtfast.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "fqm/kernels.hpp"
#include "fqm/metaplectic.hpp"
#include "fqm/rng.hpp"

namespace fqm {

namespace {

std::vector<int64_t> axis_strides(const SinoContext& ctx) {
    const size_t k = ctx.size();
    std::vector<int64_t> w(k, 1);
    for (size_t i = k; i-- > 1;) w[i - 1] = w[i] * ctx.components()[i].modulus;
    return w;
}

// forward map for one tuple convention; scale[i] = 1 gives plain residues
std::vector<int64_t> forward_for(const SinoContext& ctx, std::span<const int64_t> scale) {
    const int64_t n = ctx.value();
    const auto strides = axis_strides(ctx);
    std::vector<int64_t> fwd(n);
    for (int64_t j = 0; j < n; ++j) {
        int64_t pos = 0;
        for (size_t i = 0; i < ctx.size(); ++i) {
            const int64_t ni = ctx.components()[i].modulus;
            pos += mul_mod(scale[i], j, ni) * strides[i];
        }
        fwd[j] = pos;
    }
    return fwd;
}

// exact check of R P R^T = P_1 x ... x P_k on the index arrays: the
// image tuple of j+1 must be the componentwise increment of that of j
bool shift_conjugation_holds(const SinoContext& ctx, const std::vector<int64_t>& fwd) {
    const int64_t n = ctx.value();
    const auto strides = axis_strides(ctx);
    for (int64_t j = 0; j < n; ++j) {
        int64_t expected = 0;
        for (size_t i = 0; i < ctx.size(); ++i) {
            const int64_t ni = ctx.components()[i].modulus;
            const int64_t t = (fwd[j] / strides[i]) % ni;
            expected += ((t + 1) % ni) * strides[i];
        }
        if (fwd[(j + 1) % n] != expected) return false;
    }
    return true;
}

} // namespace

PermutationMap build_R(const SinoContext& ctx) {
    const int64_t n = ctx.value();
    const size_t k = ctx.size();

    std::vector<int64_t> plain(k, 1), scaled(k);
    for (size_t i = 0; i < k; ++i) scaled[i] = ctx.components()[i].cofactor_inverse;

    PermutationMap perm;
    perm.n = n;
    perm.forward = forward_for(ctx, plain);
    if (!shift_conjugation_holds(ctx, perm.forward)) {
        perm.forward = forward_for(ctx, scaled);
        if (!shift_conjugation_holds(ctx, perm.forward))
            throw Error("build_R: neither index convention satisfies the shift conjugation");
    }
    perm.inverse.assign(n, 0);
    for (int64_t j = 0; j < n; ++j) perm.inverse[perm.forward[j]] = j;
    return perm;
}

std::vector<WeylIndex> weyl_component_indices(WeylIndex idx, const SinoContext& ctx) {
    std::vector<WeylIndex> parts;
    parts.reserve(ctx.size());
    for (const auto& comp : ctx.components()) {
        const int64_t ri = canonical_mod(idx.r, comp.modulus);
        const int64_t si = mul_mod(comp.cofactor_inverse, idx.s, comp.modulus);
        parts.push_back({ri, si});
    }
    return parts;
}

FactoredMap factor_map(const SL2Element& a, const SinoContext& ctx) {
    if (!(a.modulus() == ctx.modulus()))
        throw DimensionMismatchError("factor_map: context modulus mismatch");

    FactoredMap fm{ctx, build_R(ctx), {}};
    for (const auto& comp : ctx.components()) {
        const OddModulus ni(comp.modulus);
        const int64_t bi = mul_mod(comp.cofactor_inverse, a.b(), comp.modulus);
        const int64_t ci = mul_mod(comp.cofactor, a.c(), comp.modulus);
        const SL2Element tilted(canonical_mod(a.a(), comp.modulus), bi, ci,
                                canonical_mod(a.d(), comp.modulus), ni);
        fm.blocks.push_back(build_U_prime_power(tilted));
    }

    // Fold the global phase into the first block: compare one row of the
    // reconstruction against the same row of build_U(A).
    const int64_t n = ctx.value();
    const auto strides = axis_strides(ctx);
    std::vector<cd> recon_row(n);
    for (int64_t j = 0; j < n; ++j) {
        const int64_t pos = fm.perm.forward[j];
        cd prod = 1.0;
        for (size_t i = 0; i < ctx.size(); ++i) {
            const int64_t ni = ctx.components()[i].modulus;
            const int64_t t = (pos / strides[i]) % ni;
            prod *= fm.blocks[i].at(0, t);
        }
        recon_row[j] = prod;
    }
    int64_t anchor = 0;
    double mag = -1.0;
    for (int64_t j = 0; j < n; ++j) {
        const double m = std::abs(recon_row[j]);
        if (m > mag) {
            mag = m;
            anchor = j;
        }
    }
    const std::vector<cd> u_row = build_U_row(a, ctx, fm.perm.inverse[0]);
    const cd phase = u_row[anchor] / recon_row[anchor];
    for (int64_t i = 0; i < fm.blocks.front().dim() * fm.blocks.front().dim(); ++i)
        fm.blocks.front().data()[i] *= phase;
    return fm;
}

namespace {

template <typename Contract>
std::vector<cd> apply_impl(const FactoredMap& fm, const std::vector<cd>& v, Contract contract) {
    const int64_t n = fm.ctx.value();
    if (static_cast<int64_t>(v.size()) != n)
        throw DimensionMismatchError("apply_factored: vector length " + std::to_string(v.size()) +
                                     " != " + std::to_string(n));
    const auto strides = axis_strides(fm.ctx);

    std::vector<cd> buf_a(n), buf_b(n);
    for (int64_t j = 0; j < n; ++j) buf_a[fm.perm.forward[j]] = v[j];

    for (size_t i = 0; i < fm.ctx.size(); ++i) {
        contract(n, fm.ctx.components()[i].modulus, strides[i], fm.blocks[i].data(),
                 buf_a.data(), buf_b.data());
        std::swap(buf_a, buf_b);
    }

    std::vector<cd> out(n);
    for (int64_t j = 0; j < n; ++j) out[j] = buf_a[fm.perm.forward[j]];
    return out;
}

} // namespace

std::vector<cd> apply_factored(const FactoredMap& fm, const std::vector<cd>& v) {
    return apply_impl(fm, v,
                      [](int64_t n, int64_t dim, int64_t stride, const cd* block, const cd* src,
                         cd* dst) { kernels::contract_axis(n, dim, stride, block, src, dst); });
}

std::vector<cd> apply_factored_counted(const FactoredMap& fm, const std::vector<cd>& v,
                                       uint64_t* madd_count) {
    return apply_impl(fm, v,
                      [madd_count](int64_t n, int64_t dim, int64_t stride, const cd* block,
                                   const cd* src, cd* dst) {
                          kernels::contract_axis_counted(n, dim, stride, block, src, dst,
                                                         madd_count);
                      });
}

DenseMap tensor_compose(std::span<const DenseMap> blocks) {
    if (blocks.empty()) throw Error("tensor_compose: no blocks");
    int64_t total = 1;
    for (const auto& b : blocks) {
        total *= b.dim();
        if (total > 4096) throw SizeLimitError("tensor_compose: total dimension exceeds 4096");
    }
    DenseMap acc = blocks[0];
    for (size_t i = 1; i < blocks.size(); ++i) acc = kron(acc, blocks[i]);
    return acc;
}

DenseMap reconstruct_dense(const FactoredMap& fm) {
    const int64_t n = fm.ctx.value();
    if (n > 4096) throw SizeLimitError("reconstruct_dense: capped at N <= 4096");
    const auto strides = axis_strides(fm.ctx);
    DenseMap out(n);
    for (int64_t i = 0; i < n; ++i) {
        const int64_t pi = fm.perm.forward[i];
        for (int64_t j = 0; j < n; ++j) {
            const int64_t pj = fm.perm.forward[j];
            cd prod = 1.0;
            for (size_t l = 0; l < fm.ctx.size(); ++l) {
                const int64_t nl = fm.ctx.components()[l].modulus;
                prod *= fm.blocks[l].at((pi / strides[l]) % nl, (pj / strides[l]) % nl);
            }
            out.at(i, j) = prod;
        }
    }
    return out;
}

namespace {

template <typename F>
double median_ns(int repetitions, F&& work) {
    std::vector<double> times;
    times.reserve(repetitions);
    work(); // warm-up
    for (int rep = 0; rep < repetitions; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        work();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

BenchReport bench_apply(OddModulus n, const SL2Element& a, int repetitions, uint64_t seed) {
    if (repetitions < 1) throw OutOfRangeError("bench_apply: repetitions must be >= 1");
    const SinoContext ctx(n);
    const FactoredMap fm = factor_map(a, ctx);

    BenchReport report;
    report.n = n.value();
    for (const auto& c : ctx.components()) report.factors.push_back(c.modulus);

    Rng rng(seed);
    const std::vector<cd> v = random_vector(rng, n.value());

    uint64_t madds = 0;
    volatile double sink = 0.0;
    auto counted = apply_factored_counted(fm, v, &madds);
    sink = sink + counted[0].real();
    report.madd_count = madds;

    report.fast_ns = median_ns(repetitions, [&] {
        auto out = apply_factored(fm, v);
        sink = sink + out[0].real();
    });

    if (n.value() <= 4096) {
        const DenseMap dense = reconstruct_dense(fm);
        report.dense_ns = median_ns(repetitions, [&] {
            auto out = matvec(dense, v);
            sink = sink + out[0].real();
        });
        report.ratio = *report.dense_ns / report.fast_ns;
    }
    return report;
}

} // namespace fqm
