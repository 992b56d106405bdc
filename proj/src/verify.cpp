#include "fqm/verify.hpp"

#include <cmath>
#include <set>

#include "fqm/crtfast.hpp"
#include "fqm/dynamics.hpp"
#include "fqm/heisenberg.hpp"
#include "fqm/metaplectic.hpp"
#include "fqm/rng.hpp"

namespace fqm {

bool VerificationReport::all_pass() const {
    for (const auto& inv : invariants)
        if (inv.status == InvariantResult::Status::fail) return false;
    return true;
}

namespace {

using Status = InvariantResult::Status;

struct Suite {
    OddModulus n;
    SinoContext ctx;
    int samples;
    uint64_t seed;
    ToleranceConfig tol;
    VerificationReport report;

    Suite(OddModulus n_, int samples_, uint64_t seed_, ToleranceConfig tol_)
        : n(n_), ctx(n_), samples(samples_), seed(seed_), tol(tol_) {
        report.n = n.value();
        report.samples = samples;
        report.seed = seed;
        report.tolerance_scale = tol.matrix_tol_scale;
    }

    double tau() const { return tol.tau(n.value()); }
    bool single_factor() const { return ctx.size() == 1; }

    void record(const std::string& name, double residual, double tolerance,
                const std::string& note = "") {
        report.invariants.push_back({name,
                                     residual <= tolerance ? Status::pass : Status::fail,
                                     residual, tolerance, note});
    }

    void record_exact(const std::string& name, int64_t violations, const std::string& note = "") {
        report.invariants.push_back({name,
                                     violations == 0 ? Status::pass : Status::fail,
                                     static_cast<double>(violations), 0.0, note});
    }

    void skip(const std::string& name, const std::string& note) {
        report.invariants.push_back({name, Status::skipped, 0.0, 0.0, note});
    }

    std::vector<SL2Element> sample_elements(uint64_t salt, int count) {
        Rng rng(seed ^ salt);
        std::vector<SL2Element> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) out.push_back(random_sl2(rng, n));
        return out;
    }
};

void check_crt_bijection(Suite& s) {
    const int64_t N = s.n.value();
    int64_t bad = 0;
    std::set<std::vector<int64_t>> seen;
    for (int64_t r = 0; r < N; ++r) {
        const auto parts = sino_decompose(r, s.ctx);
        if (sino_recompose(parts, s.ctx) != r) ++bad;
        if (!seen.insert(parts).second) ++bad;
    }
    s.record_exact("crt_roundtrip", bad, "exhaustive over Z_N");
}

void check_crt_homomorphism(Suite& s) {
    const int64_t N = s.n.value();
    int64_t bad = 0;
    const bool exhaustive = N <= 128;
    Rng rng(s.seed ^ 0x11);
    const int64_t pair_count = exhaustive ? N * N : int64_t(s.samples) * s.samples;
    for (int64_t t = 0; t < pair_count; ++t) {
        const int64_t r = exhaustive ? t / N : rng.below(N);
        const int64_t q = exhaustive ? t % N : rng.below(N);
        const auto pr = sino_decompose(r, s.ctx);
        const auto pq = sino_decompose(q, s.ctx);
        const auto prod = sino_decompose(mul_mod(r, q, N), s.ctx);
        const auto sum = sino_decompose(add_mod(r, q, N), s.ctx);
        for (size_t i = 0; i < s.ctx.size(); ++i) {
            const int64_t ni = s.ctx.components()[i].modulus;
            if (prod[i] != mul_mod(pr[i], pq[i], ni)) ++bad;
            if (sum[i] != add_mod(pr[i], pq[i], ni)) ++bad;
        }
    }
    s.record_exact("crt_ring_homomorphism", bad,
                   exhaustive ? "exhaustive pairs" : "sampled pairs");
}

void check_sl2_factorization(Suite& s) {
    if (s.single_factor()) {
        s.skip("sl2_crt_factorization", "single prime-power factor");
        return;
    }
    int64_t bad = 0;
    const auto as = s.sample_elements(0x21, s.samples);
    const auto bs = s.sample_elements(0x22, s.samples);
    for (int i = 0; i < s.samples; ++i) {
        const auto lhs = crt_split_sl2(as[i] * bs[i], s.ctx);
        const auto pa = crt_split_sl2(as[i], s.ctx);
        const auto pb = crt_split_sl2(bs[i], s.ctx);
        for (size_t l = 0; l < s.ctx.size(); ++l)
            if (!(lhs[l] == pa[l] * pb[l])) ++bad;
        // embedded factors commute and multiply back
        std::vector<SL2Element> embedded;
        for (size_t l = 0; l < s.ctx.size(); ++l) {
            std::vector<SL2Element> slots;
            for (size_t m = 0; m < s.ctx.size(); ++m)
                slots.push_back(m == l ? pa[m]
                                       : SL2Element::identity(OddModulus(
                                             s.ctx.components()[m].modulus)));
            embedded.push_back(crt_join_sl2(slots, s.ctx));
        }
        SL2Element forward = embedded.front();
        for (size_t l = 1; l < embedded.size(); ++l) forward = forward * embedded[l];
        SL2Element backward = embedded.back();
        for (size_t l = embedded.size() - 1; l-- > 0;) backward = backward * embedded[l];
        if (!(forward == as[i]) || !(backward == as[i])) ++bad;
        if (!(crt_join_sl2(pa, s.ctx) == as[i])) ++bad;
    }
    s.record_exact("sl2_crt_factorization", bad);
}

void check_o2_subgroup(Suite& s) {
    if (s.single_factor()) {
        s.skip("o2_factorization", "single prime-power factor");
        return;
    }
    const int64_t N = s.n.value();
    if (N > 512) {
        s.skip("o2_factorization", "N too large for the exhaustive scan");
        return;
    }
    std::vector<SL2Element> o2;
    for (int64_t a = 0; a < N; ++a)
        for (int64_t b = 0; b < N; ++b)
            if (add_mod(mul_mod(a, a, N), mul_mod(b, b, N), N) == 1)
                o2.emplace_back(a, b, canonical_mod(-b, N), a, s.n);
    int64_t bad = 0;
    for (const auto& x : o2)
        if (!is_in_O2(x)) ++bad;
    // closure
    const size_t cap = o2.size() > 64 ? 64 : o2.size();
    for (size_t i = 0; i < cap; ++i)
        for (size_t j = 0; j < cap; ++j)
            if (!is_in_O2(o2[i] * o2[j])) ++bad;
    // every element is the product of its embedded component factors
    for (const auto& x : o2) {
        const auto parts = crt_split_sl2(x, s.ctx);
        std::vector<SL2Element> embedded;
        for (size_t l = 0; l < s.ctx.size(); ++l) {
            std::vector<SL2Element> slots;
            for (size_t m = 0; m < s.ctx.size(); ++m)
                slots.push_back(m == l ? parts[m]
                                       : SL2Element::identity(OddModulus(
                                             s.ctx.components()[m].modulus)));
            embedded.push_back(crt_join_sl2(slots, s.ctx));
        }
        SL2Element prod = embedded.front();
        for (size_t l = 1; l < embedded.size(); ++l) prod = prod * embedded[l];
        if (!(prod == x)) ++bad;
        for (const auto& e : embedded)
            if (!is_in_O2(e)) ++bad;
    }
    s.record_exact("o2_factorization", bad,
                   "|O2(N)| = " + std::to_string(o2.size()));
}

void check_weyl_relation(Suite& s) {
    const int64_t N = s.n.value();
    const auto [q, p] = clock_shift(s.n);
    const PhaseTable w(N);
    DenseMap rhs = matmul(p, q);
    for (int64_t i = 0; i < N * N; ++i) rhs.data()[i] *= w(1);
    s.record("weyl_relation", max_abs_diff(matmul(q, p), rhs), 1e-12);
}

void check_composition(Suite& s) {
    const int64_t N = s.n.value();
    const PhaseTable w(N);
    const int64_t half = half_mod(N);
    double worst = 0.0;
    const bool exhaustive = N <= 9;
    Rng rng(s.seed ^ 0x31);
    const int64_t count = exhaustive ? N * N * N * N : int64_t(s.samples) * 8;
    for (int64_t t = 0; t < count; ++t) {
        int64_t r, sx, rp, sp;
        if (exhaustive) {
            r = t % N;
            sx = (t / N) % N;
            rp = (t / (N * N)) % N;
            sp = t / (N * N * N);
        } else {
            r = rng.below(N);
            sx = rng.below(N);
            rp = rng.below(N);
            sp = rng.below(N);
        }
        const DenseMap lhs =
            matmul(weyl_element({r, sx}, s.n), weyl_element({rp, sp}, s.n));
        DenseMap rhs = weyl_element({r + rp, sx + sp}, s.n);
        const cd phase = w(mul_mod(sub_mod(mul_mod(rp, sx, N), mul_mod(sp, r, N), N), half, N));
        for (int64_t i = 0; i < N * N; ++i) rhs.data()[i] *= phase;
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    s.record("heisenberg_composition", worst, 1e-10,
             exhaustive ? "exhaustive index pairs" : "sampled index pairs");
}

void check_commutation(Suite& s) {
    const int64_t N = s.n.value();
    const PhaseTable w(N);
    double worst = 0.0;
    Rng rng(s.seed ^ 0x32);
    for (int t = 0; t < s.samples * 4; ++t) {
        const int64_t r = rng.below(N), sx = rng.below(N), rp = rng.below(N), sp = rng.below(N);
        const DenseMap a = weyl_element({r, sx}, s.n);
        const DenseMap b = weyl_element({rp, sp}, s.n);
        DenseMap rhs = matmul(b, a);
        const cd phase = w(sub_mod(mul_mod(rp, sx, N), mul_mod(sp, r, N), N));
        for (int64_t i = 0; i < N * N; ++i) rhs.data()[i] *= phase;
        worst = std::max(worst, max_abs_diff(matmul(a, b), rhs));
    }
    s.record("heisenberg_commutation", worst, 1e-10);
}

void check_heisenberg_crt(Suite& s) {
    if (s.single_factor()) {
        s.skip("heisenberg_crt_factorization", "single prime-power factor");
        return;
    }
    const int64_t N = s.n.value();
    double worst = 0.0;
    const bool exhaustive = N <= 15;
    Rng rng(s.seed ^ 0x33);
    const int64_t count = exhaustive ? N * N : s.samples * 4;
    for (int64_t t = 0; t < count; ++t) {
        const int64_t r = exhaustive ? t / N : rng.below(N);
        const int64_t sx = exhaustive ? t % N : rng.below(N);
        std::vector<DenseMap> embedded;
        for (size_t i = 0; i < s.ctx.size(); ++i) {
            const int64_t e = s.ctx.idempotent(i);
            const int64_t ni = s.ctx.components()[i].modulus;
            embedded.push_back(weyl_element({mul_mod(canonical_mod(r, ni), e, N),
                                             mul_mod(canonical_mod(sx, ni), e, N)},
                                            s.n));
        }
        DenseMap forward = embedded.front();
        for (size_t i = 1; i < embedded.size(); ++i) forward = matmul(forward, embedded[i]);
        DenseMap backward = embedded.back();
        for (size_t i = embedded.size() - 1; i-- > 0;) backward = matmul(backward, embedded[i]);
        const DenseMap direct = weyl_element({r, sx}, s.n);
        worst = std::max(worst, max_abs_diff(forward, direct));
        worst = std::max(worst, max_abs_diff(backward, direct));
    }
    s.record("heisenberg_crt_factorization", worst, s.tau(),
             exhaustive ? "exhaustive index pairs" : "sampled index pairs");
}

void check_weyl_unitarity(Suite& s) {
    const int64_t N = s.n.value();
    double worst = 0.0;
    Rng rng(s.seed ^ 0x34);
    const int64_t count = std::min<int64_t>(N * N, 64);
    for (int64_t t = 0; t < count; ++t)
        worst = std::max(worst, unitarity_residual(
                                    weyl_element({rng.below(N), rng.below(N)}, s.n)));
    s.record("weyl_unitarity", worst, s.tau());
}

void check_fourier_basis(Suite& s) {
    const int64_t N = s.n.value();
    const DenseMap f = fourier_basis(s.n);
    const auto [q, p] = clock_shift(s.n);
    (void)q;
    const PhaseTable w(N);
    double worst = unitarity_residual(f); // orthonormal columns
    // P e_k = w^{-k} e_k for the k-th column
    const DenseMap pf = matmul(p, f);
    for (int64_t col = 0; col < N; ++col) {
        const int64_t k = col + 1;
        for (int64_t row = 0; row < N; ++row)
            worst = std::max(worst, std::abs(pf.at(row, col) - w(-k) * f.at(row, col)));
    }
    s.record("fourier_eigenbasis", worst, 1e-12, "eigenvalue convention P e_k = w^{-k} e_k");
}

void check_intertwining(Suite& s) {
    const int64_t N = s.n.value();
    std::vector<SL2Element> elements;
    std::string note;
    if (N == 3) {
        elements = enumerate_sl2(s.n);
        note = "exhaustive over SL(2,Z_3), " + std::to_string(elements.size()) + " elements";
    } else {
        elements = s.sample_elements(0x41, s.samples);
        note = std::to_string(s.samples) + " sampled elements";
    }
    std::vector<WeylIndex> indices;
    if (N > 45) {
        Rng rng(s.seed ^ 0x42);
        for (int t = 0; t < 192; ++t) indices.push_back({rng.below(N), rng.below(N)});
        note += ", sampled index pairs";
    }
    double worst = 0.0;
    for (const auto& a : elements) {
        const DenseMap u = build_U(a, s.ctx);
        const double res = indices.empty() ? intertwine_residual(u, a)
                                           : intertwine_residual(u, a, indices);
        worst = std::max(worst, res);
        worst = std::max(worst, unitarity_residual(u));
    }
    s.record("intertwining", worst, s.tau(), note);
}

void check_oracle(Suite& s) {
    if (s.n.value() > 45) {
        s.skip("oracle_equivalence", "oracle limited to N <= 45");
        return;
    }
    double worst = 0.0;
    const int count = std::min(s.samples, 10);
    const auto elements = s.sample_elements(0x43, count);
    for (const auto& a : elements)
        worst = std::max(worst, phase_aligned_diff(build_U(a, s.ctx), oracle_U(a)));
    s.record("oracle_equivalence", worst, s.tau(),
             std::to_string(count) + " sampled elements, phase aligned");
}

void check_direct_formula(Suite& s) {
    double worst = 0.0;
    int used = 0;
    const auto elements = s.sample_elements(0x44, s.samples);
    for (const auto& a : elements) {
        try {
            const DenseMap direct = build_U_direct(a);
            worst = std::max(worst, phase_aligned_diff(build_U(a, s.ctx), direct));
            ++used;
        } catch (const NonInvertibleError&) {
            // delta not invertible mod N for any S^k shift; skip this element
        }
    }
    if (used == 0) {
        s.skip("direct_formula_crosscheck", "no sampled element admits the direct mod-N formula");
        return;
    }
    s.record("direct_formula_crosscheck", worst, s.tau(),
             std::to_string(used) + " applicable elements, phase aligned");
}

void check_cocycle(Suite& s) {
    double worst_unimodular = 0.0;
    double worst_one = 0.0;
    const auto as = s.sample_elements(0x45, s.samples);
    const auto bs = s.sample_elements(0x46, s.samples);
    for (int i = 0; i < s.samples; ++i) {
        const cd c = cocycle_phase(build_U(as[i], s.ctx), build_U(bs[i], s.ctx),
                                   build_U(as[i] * bs[i], s.ctx));
        worst_unimodular = std::max(worst_unimodular, std::abs(std::abs(c) - 1.0));
        worst_one = std::max(worst_one, std::abs(c - cd(1.0, 0.0)));
    }
    char note[96];
    std::snprintf(note, sizeof(note), "max |c-1| = %.3e: representation observed exact",
                  worst_one);
    s.record("representation_cocycle", worst_unimodular, 1e-9, note);
}

void check_gauss_closed_form(Suite& s) {
    const int64_t N = s.n.value();
    const cd sigma1 = gauss_sum(1, s.n);
    const cd sigma0 = gauss_sum(0, s.n);
    double worst = std::abs(sigma0 - cd(std::sqrt(double(N)), 0.0));
    bool squarefree = true;
    for (const auto& f : factor_odd(s.n).factors)
        if (f.exponent > 1) squarefree = false;
    std::string note = "sigma(0) = sqrt(N)";
    if (squarefree) {
        const cd expected = (N % 4 == 1) ? cd(1.0, 0.0) : cd(0.0, 1.0);
        worst = std::max(worst, std::abs(sigma1 - expected));
        note += (N % 4 == 1) ? "; sigma(1) = 1" : "; sigma(1) = i";
    } else {
        note += "; N not squarefree, sigma(1) closed form not asserted";
    }
    s.record("gauss_sum_closed_form", worst, 1e-10, note);
}

void check_gauss_factorization(Suite& s) {
    if (s.single_factor()) {
        s.skip("gauss_sum_factorization", "single prime-power factor");
        return;
    }
    const int64_t N = s.n.value();
    double worst = 0.0;
    for (int64_t x = 0; x < N; ++x) {
        const auto parts = sino_decompose(x, s.ctx);
        cd prod = 1.0;
        for (size_t i = 0; i < s.ctx.size(); ++i) {
            const auto& comp = s.ctx.components()[i];
            prod *= gauss_sum(mul_mod(comp.cofactor, parts[i], comp.modulus),
                              OddModulus(comp.modulus));
        }
        worst = std::max(worst, std::abs(gauss_sum(x, s.n) - prod));
    }
    s.record("gauss_sum_factorization", worst, 1e-10, "all x in Z_N");
}

void check_r_permutation(Suite& s) {
    const auto perm = build_R(s.ctx);
    int64_t bad = 0;
    for (int64_t j = 0; j < perm.n; ++j)
        if (perm.inverse[perm.forward[j]] != j) ++bad;
    s.record_exact("r_orthogonality", bad, "R R^T = I on index arrays");
}

void check_r_weyl_conjugation(Suite& s) {
    if (s.single_factor()) {
        s.skip("r_weyl_conjugation", "single prime-power factor, R = I");
        return;
    }
    const int64_t N = s.n.value();
    const auto perm = build_R(s.ctx);
    double worst = 0.0;
    const bool exhaustive = N <= 21;
    Rng rng(s.seed ^ 0x51);
    const int64_t count = exhaustive ? N * N : s.samples * 4;
    for (int64_t t = 0; t < count; ++t) {
        const int64_t r = exhaustive ? t / N : rng.below(N);
        const int64_t sx = exhaustive ? t % N : rng.below(N);
        const DenseMap j = weyl_element({r, sx}, s.n);
        DenseMap conj(N); // R J R^T
        for (int64_t i = 0; i < N; ++i)
            for (int64_t jj = 0; jj < N; ++jj)
                conj.at(perm.forward[i], perm.forward[jj]) = j.at(i, jj);
        std::vector<DenseMap> blocks;
        for (size_t i = 0; i < s.ctx.size(); ++i) {
            const auto parts = weyl_component_indices({r, sx}, s.ctx);
            blocks.push_back(weyl_element(parts[i], OddModulus(s.ctx.components()[i].modulus)));
        }
        worst = std::max(worst, max_abs_diff(conj, tensor_compose(blocks)));
    }
    s.record("r_weyl_conjugation", worst, s.tau(),
             exhaustive ? "exhaustive index pairs" : "sampled index pairs");
}

void check_tensor_factorization(Suite& s) {
    if (s.single_factor()) {
        s.skip("tensor_factorization", "single prime-power factor");
        return;
    }
    double worst = 0.0;
    const auto elements = s.sample_elements(0x52, s.samples);
    for (const auto& a : elements) {
        const FactoredMap fm = factor_map(a, s.ctx);
        worst = std::max(worst, phase_aligned_diff(build_U(a, s.ctx), reconstruct_dense(fm)));
        worst = std::max(worst, unitarity_residual(reconstruct_dense(fm)));
    }
    s.record("tensor_factorization", worst, s.tau(), "phase aligned");
}

void check_fast_apply(Suite& s) {
    double worst = 0.0;
    Rng rng(s.seed ^ 0x53);
    const auto elements = s.sample_elements(0x54, std::min(s.samples, 5));
    for (const auto& a : elements) {
        const DenseMap dense = build_U(a, s.ctx);
        const FactoredMap fm = factor_map(a, s.ctx);
        for (int t = 0; t < 4; ++t) {
            const auto v = random_vector(rng, s.n.value());
            worst = std::max(worst, phase_aligned_diff(matvec(dense, v), apply_factored(fm, v)));
        }
    }
    s.record("fast_apply_consistency", worst, s.tau(), "phase aligned");
}

void check_madd_count(Suite& s) {
    Rng rng(s.seed ^ 0x55);
    const SL2Element a = random_sl2(rng, s.n);
    const FactoredMap fm = factor_map(a, s.ctx);
    const auto v = random_vector(rng, s.n.value());
    uint64_t madds = 0;
    apply_factored_counted(fm, v, &madds);
    uint64_t expected = 0;
    for (const auto& c : s.ctx.components())
        expected += static_cast<uint64_t>(s.n.value()) * c.modulus;
    s.record_exact("fast_apply_madd_count",
                   madds == expected ? 0 : 1,
                   std::to_string(madds) + " = N * sum N_i");
}

void check_period_consistency(Suite& s) {
    const SL2Element cat(1, 1, 1, 2, s.n);
    const int64_t t = order_mod(cat);
    if (t > 256) {
        s.skip("classical_quantum_period", "order " + std::to_string(t) + " too large");
        return;
    }
    const DenseMap u = build_U(cat, s.ctx);
    const auto [res, c] = scalar_multiple_of_identity(matpow(u, t));
    const double worst = std::max(res, std::abs(std::abs(c) - 1.0));
    s.record("classical_quantum_period", worst, s.tau(),
             "order_mod([[1,1],[1,2]]) = " + std::to_string(t));
}

} // namespace

VerificationReport run_verification(OddModulus n, int samples, uint64_t seed,
                                    const ToleranceConfig& tol) {
    Suite s(n, samples, seed, tol);
    check_crt_bijection(s);
    check_crt_homomorphism(s);
    check_sl2_factorization(s);
    check_o2_subgroup(s);
    check_weyl_relation(s);
    check_composition(s);
    check_commutation(s);
    check_heisenberg_crt(s);
    check_weyl_unitarity(s);
    check_fourier_basis(s);
    check_intertwining(s);
    check_oracle(s);
    check_direct_formula(s);
    check_cocycle(s);
    check_gauss_closed_form(s);
    check_gauss_factorization(s);
    check_r_permutation(s);
    check_r_weyl_conjugation(s);
    check_tensor_factorization(s);
    check_fast_apply(s);
    check_madd_count(s);
    check_period_consistency(s);
    return s.report;
}

} // namespace fqm
