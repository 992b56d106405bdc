// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "fqm/crtfast.hpp"
#include "fqm/dynamics.hpp"
#include "fqm/metaplectic.hpp"
#include "fqm/rng.hpp"

using namespace fqm;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    std::chrono::steady_clock::time_point start;

    explicit Criterion(int id_) : id(id_), start(std::chrono::steady_clock::now()) {}

    void report(bool pass, const char* what, double residual, double tol) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (residual %.3e, tol %.1e, %.1fs)\n",
                    pass ? "PASS" : "FAIL", id, what, residual, tol, secs);
        std::fflush(stdout);
        if (!pass) ++g_failures;
    }
};

double tau(int64_t n) { return 1e-9 * static_cast<double>(n); }

void criterion_1_crt() {
    Criterion c(1);
    int64_t bad = 0;
    for (int64_t n : {9, 15, 21, 45, 105}) {
        SinoContext ctx{OddModulus(n)};
        std::set<std::vector<int64_t>> seen;
        for (int64_t r = 0; r < n; ++r) {
            const auto parts = sino_decompose(r, ctx);
            if (sino_recompose(parts, ctx) != r) ++bad;
            if (!seen.insert(parts).second) ++bad;
        }
        for (int64_t r = 0; r < n; ++r)
            for (int64_t q = 0; q < n; ++q) {
                const auto pr = sino_decompose(r, ctx), pq = sino_decompose(q, ctx);
                const auto prod = sino_decompose(mul_mod(r, q, n), ctx);
                const auto sum = sino_decompose(add_mod(r, q, n), ctx);
                for (size_t i = 0; i < ctx.size(); ++i) {
                    const int64_t ni = ctx.components()[i].modulus;
                    if (prod[i] != mul_mod(pr[i], pq[i], ni)) ++bad;
                    if (sum[i] != add_mod(pr[i], pq[i], ni)) ++bad;
                }
            }
    }
    c.report(bad == 0, "CRT bijection and ring homomorphism, exhaustive for N in {9,15,21,45,105}",
             static_cast<double>(bad), 0.0);
}

void criterion_2_weyl_relation() {
    Criterion c(2);
    double worst = 0.0;
    for (int64_t n : {3, 5, 9, 15, 21}) {
        const auto [q, p] = clock_shift(OddModulus(n));
        const PhaseTable w(n);
        DenseMap rhs = matmul(p, q);
        for (int64_t i = 0; i < n * n; ++i) rhs.data()[i] *= w(1);
        worst = std::max(worst, max_abs_diff(matmul(q, p), rhs));
    }
    c.report(worst <= 1e-12, "Weyl relation QP = wPQ for N in {3,5,9,15,21}", worst, 1e-12);
}

void criterion_3_composition() {
    Criterion c(3);
    const int64_t n = 9;
    OddModulus mod(n);
    const PhaseTable w(n);
    const int64_t half = half_mod(n);
    std::vector<DenseMap> cache;
    cache.reserve(n * n);
    for (int64_t r = 0; r < n; ++r)
        for (int64_t s = 0; s < n; ++s) cache.push_back(weyl_element({r, s}, mod));
    double worst = 0.0;
    for (int64_t r = 0; r < n; ++r)
        for (int64_t s = 0; s < n; ++s)
            for (int64_t rp = 0; rp < n; ++rp)
                for (int64_t sp = 0; sp < n; ++sp) {
                    const DenseMap lhs = matmul(cache[r * n + s], cache[rp * n + sp]);
                    DenseMap rhs = cache[((r + rp) % n) * n + (s + sp) % n];
                    const cd phase =
                        w(mul_mod(sub_mod(mul_mod(rp, s, n), mul_mod(sp, r, n), n), half, n));
                    for (int64_t i = 0; i < n * n; ++i) rhs.data()[i] *= phase;
                    worst = std::max(worst, max_abs_diff(lhs, rhs));
                }
    c.report(worst <= 1e-10, "composition law exhaustive at N=9 (6561 index pairs)", worst, 1e-10);
}

void criterion_4_intertwining() {
    Criterion c(4);
    double worst = 0.0;
    bool pass = true;
    {
        OddModulus n3(3);
        for (const auto& a : enumerate_sl2(n3)) {
            const double res = intertwine_residual(build_U(a), a);
            worst = std::max(worst, res);
            if (res > tau(3)) pass = false;
        }
    }
    for (int64_t n : {5, 9, 15, 21, 45}) {
        OddModulus mod(n);
        SinoContext ctx(mod);
        Rng rng(n); // seeded per modulus
        for (int t = 0; t < 50; ++t) {
            const SL2Element a = random_sl2(rng, mod);
            const double res = intertwine_residual(build_U(a, ctx), a);
            worst = std::max(worst, res);
            if (res > tau(n)) pass = false;
        }
    }
    c.report(pass, "intertwining U^-1 J U = J_{(r,s)A}, exhaustive SL(2,Z_3) + 50 samples each "
                   "for N in {5,9,15,21,45}",
             worst, tau(45));
}

void criterion_5_oracle() {
    Criterion c(5);
    double worst = 0.0;
    bool pass = true;
    for (int64_t n : {3, 5, 9, 15}) {
        OddModulus mod(n);
        Rng rng(100 + n);
        for (int t = 0; t < 10; ++t) {
            const SL2Element a = random_sl2(rng, mod);
            const double res = phase_aligned_diff(build_U(a), oracle_U(a));
            worst = std::max(worst, res);
            if (res > tau(n)) pass = false;
        }
    }
    c.report(pass, "build_U matches the intertwining oracle up to phase, N in {3,5,9,15}, 10 each",
             worst, tau(15));
}

void criterion_6_tensor_factorization() {
    Criterion c(6);
    double worst = 0.0;
    bool pass = true;
    for (int64_t n : {15, 21, 45, 105}) {
        OddModulus mod(n);
        SinoContext ctx(mod);
        Rng rng(200 + n);
        for (int t = 0; t < 20; ++t) {
            const SL2Element a = random_sl2(rng, mod);
            const double res =
                phase_aligned_diff(build_U(a, ctx), reconstruct_dense(factor_map(a, ctx)));
            worst = std::max(worst, res);
            if (res > tau(n)) pass = false;
        }
    }
    // exhaustive R J R^T check at N=15 (225 pairs)
    {
        OddModulus n15(15);
        SinoContext ctx(n15);
        const auto perm = build_R(ctx);
        for (int64_t r = 0; r < 15; ++r)
            for (int64_t s = 0; s < 15; ++s) {
                const DenseMap j = weyl_element({r, s}, n15);
                DenseMap conj(15);
                for (int64_t i = 0; i < 15; ++i)
                    for (int64_t jj = 0; jj < 15; ++jj)
                        conj.at(perm.forward[i], perm.forward[jj]) = j.at(i, jj);
                const auto parts = weyl_component_indices({r, s}, ctx);
                std::vector<DenseMap> blocks;
                for (size_t i = 0; i < ctx.size(); ++i)
                    blocks.push_back(
                        weyl_element(parts[i], OddModulus(ctx.components()[i].modulus)));
                const double res = max_abs_diff(conj, tensor_compose(blocks));
                worst = std::max(worst, res);
                if (res > tau(15)) pass = false;
            }
    }
    c.report(pass, "R U R^T = tensor of blocks (N in {15,21,45,105}, 20 samples) + exhaustive "
                   "R J R^T at N=15",
             worst, tau(105));
}

void criterion_7_fast_apply() {
    Criterion c(7);
    double worst = 0.0;
    bool pass = true;
    for (int64_t n : {15, 105, 315}) {
        OddModulus mod(n);
        SinoContext ctx(mod);
        Rng rng(300 + n);
        const SL2Element a = random_sl2(rng, mod);
        const DenseMap dense = build_U(a, ctx);
        const FactoredMap fm = factor_map(a, ctx);
        for (int t = 0; t < 20; ++t) {
            const auto v = random_vector(rng, n);
            const double res = phase_aligned_diff(matvec(dense, v), apply_factored(fm, v));
            worst = std::max(worst, res);
            if (res > tau(n)) pass = false;
        }
    }
    c.report(pass, "factored apply equals dense matvec, N in {15,105,315}, 20 vectors each",
             worst, tau(315));
}

void criterion_8_speedup() {
    Criterion c(8);
    const int64_t n = 1155;
    OddModulus mod(n);
    SinoContext ctx(mod);
    uint64_t expected = 0;
    for (const auto& comp : ctx.components())
        expected += static_cast<uint64_t>(n) * comp.modulus;

    const auto report = bench_apply(mod, SL2Element(1, 1, 1, 2, mod), 11, 0);
    const bool count_ok = report.madd_count == expected;
    const bool ratio_ok = report.ratio && *report.ratio >= 5.0;
    char what[160];
    std::snprintf(what, sizeof(what),
                  "speedup at N=1155: madds %llu = N*sum(N_i) %llu, dense/fast ratio %.1f >= 5",
                  static_cast<unsigned long long>(report.madd_count),
                  static_cast<unsigned long long>(expected), report.ratio ? *report.ratio : 0.0);
    c.report(count_ok && ratio_ok, what, report.ratio ? *report.ratio : 0.0, 5.0);
}

void criterion_9_gauss() {
    Criterion c(9);
    double worst = 0.0;
    for (int64_t n = 3; n <= 201; n += 2) {
        // independent direct summation, no shared exponent reduction
        cd direct = 0.0;
        for (int64_t r = 0; r < n; ++r) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>((r * r) % n) / static_cast<double>(n);
            direct += cd(std::cos(angle), std::sin(angle));
        }
        direct /= std::sqrt(static_cast<double>(n));
        worst = std::max(worst, std::abs(gauss_sum(1, OddModulus(n)) - direct));

        bool squarefree = true;
        for (const auto& f : factor_odd(OddModulus(n)).factors)
            if (f.exponent > 1) squarefree = false;
        if (squarefree) {
            const cd expected = (n % 4 == 1) ? cd(1.0, 0.0) : cd(0.0, 1.0);
            worst = std::max(worst, std::abs(gauss_sum(1, OddModulus(n)) - expected));
        }
    }
    {
        OddModulus n15(15);
        SinoContext ctx(n15);
        for (int64_t x = 0; x < 15; ++x) {
            const auto parts = sino_decompose(x, ctx);
            cd prod = 1.0;
            for (size_t i = 0; i < ctx.size(); ++i) {
                const auto& comp = ctx.components()[i];
                prod *= gauss_sum(mul_mod(comp.cofactor, parts[i], comp.modulus),
                                  OddModulus(comp.modulus));
            }
            worst = std::max(worst, std::abs(gauss_sum(x, n15) - prod));
        }
    }
    c.report(worst <= 1e-10,
             "Gauss sums: direct summation for odd N <= 201, closed form for squarefree N, "
             "factorization at N=15",
             worst, 1e-10);
}

void criterion_10_period() {
    Criterion c(10);
    OddModulus n5(5);
    const SL2Element cat(1, 1, 1, 2, n5);
    const int64_t t = order_mod(cat);
    const auto [res, scalar] = scalar_multiple_of_identity(matpow(build_U(cat), t));
    const double worst = std::max(res, std::abs(std::abs(scalar) - 1.0));
    const bool pass = (t == 10) && worst <= tau(5);
    char what[120];
    std::snprintf(what, sizeof(what),
                  "order_mod([[1,1],[1,2]], 5) = %lld and U^%lld is a unimodular multiple of I",
                  static_cast<long long>(t), static_cast<long long>(t));
    c.report(pass, what, worst, tau(5));
}

void criterion_11_cocycle() {
    Criterion c(11);
    double worst_abs = 0.0, worst_one = 0.0;
    for (int64_t n : {3, 5, 9, 15}) {
        OddModulus mod(n);
        SinoContext ctx(mod);
        Rng rng(400 + n);
        for (int t = 0; t < 10; ++t) {
            const SL2Element a = random_sl2(rng, mod);
            const SL2Element b = random_sl2(rng, mod);
            const cd phase =
                cocycle_phase(build_U(a, ctx), build_U(b, ctx), build_U(a * b, ctx));
            worst_abs = std::max(worst_abs, std::abs(std::abs(phase) - 1.0));
            worst_one = std::max(worst_one, std::abs(phase - cd(1.0, 0.0)));
        }
    }
    char what[160];
    std::snprintf(what, sizeof(what),
                  "cocycle |c| = 1 within 1e-9; measured max |c-1| = %.3e (c = 1 observed, "
                  "reported not assumed)",
                  worst_one);
    c.report(worst_abs <= 1e-9, what, worst_abs, 1e-9);
}

} // namespace

int main() {
    criterion_1_crt();
    criterion_2_weyl_relation();
    criterion_3_composition();
    criterion_4_intertwining();
    criterion_5_oracle();
    criterion_6_tensor_factorization();
    criterion_7_fast_apply();
    criterion_8_speedup();
    criterion_9_gauss();
    criterion_10_period();
    criterion_11_cocycle();
    std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
