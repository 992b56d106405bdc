// Timing harness for the compute kernels: each OpenMP kernel against its
// serial reference, plus the factored apply against the dense matvec.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#include "fqm/crtfast.hpp"
#include "fqm/kernels.hpp"
#include "fqm/metaplectic.hpp"
#include "fqm/rng.hpp"

using fqm::cd;

namespace {

template <typename F>
double median_ns(int reps, F&& work) {
    std::vector<double> times;
    work();
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        work();
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

int main(int argc, char** argv) {
    const int64_t n = argc > 1 ? std::atoll(argv[1]) : 1155;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 11;

    fqm::Rng rng(0);
    std::vector<cd> mat(n * n), x(n), y(n);
    for (auto& v : mat) v = rng.unit_complex();
    for (auto& v : x) v = rng.unit_complex();

    std::printf("kernel,n,serial_ns,parallel_ns,speedup\n");

    const double mv_s = median_ns(reps, [&] { fqm::kernels::matvec_serial(n, mat.data(), x.data(), y.data()); });
    const double mv_p = median_ns(reps, [&] { fqm::kernels::matvec_omp(n, mat.data(), x.data(), y.data()); });
    std::printf("matvec,%lld,%.0f,%.0f,%.2f\n", (long long)n, mv_s, mv_p, mv_s / mv_p);

    const int64_t nm = std::min<int64_t>(n, 512);
    std::vector<cd> a(nm * nm), b(nm * nm), c(nm * nm);
    for (auto& v : a) v = rng.unit_complex();
    for (auto& v : b) v = rng.unit_complex();
    const double mm_s = median_ns(3, [&] { fqm::kernels::matmul_serial(nm, a.data(), b.data(), c.data()); });
    const double mm_p = median_ns(3, [&] { fqm::kernels::matmul_omp(nm, a.data(), b.data(), c.data()); });
    std::printf("matmul,%lld,%.0f,%.0f,%.2f\n", (long long)nm, mm_s, mm_p, mm_s / mm_p);

    try {
        const fqm::OddModulus mod(n);
        const fqm::SinoContext ctx(mod);
        const fqm::SL2Element cat(1, 1, 1, 2, mod);
        const fqm::FactoredMap fm = fqm::factor_map(cat, ctx);
        std::vector<cd> out(n);
        const auto& first = ctx.components().front();
        int64_t stride = n / first.modulus;
        const double ca_s = median_ns(reps, [&] {
            fqm::kernels::contract_axis_serial(n, first.modulus, stride, fm.blocks[0].data(),
                                               x.data(), out.data());
        });
        const double ca_p = median_ns(reps, [&] {
            fqm::kernels::contract_axis_omp(n, first.modulus, stride, fm.blocks[0].data(),
                                            x.data(), out.data());
        });
        std::printf("contract_axis,%lld,%.0f,%.0f,%.2f\n", (long long)n, ca_s, ca_p, ca_s / ca_p);

        const auto report = fqm::bench_apply(mod, cat, reps);
        if (report.dense_ns)
            std::printf("# dense vs factored apply at n=%lld: dense %.0f ns, fast %.0f ns, "
                        "ratio %.1f, madds %llu\n",
                        (long long)n, *report.dense_ns, report.fast_ns, *report.ratio,
                        (unsigned long long)report.madd_count);
    } catch (const fqm::Error& e) {
        std::printf("# factored bench skipped: %s\n", e.what());
    }
    return 0;
}
