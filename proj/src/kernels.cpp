#include "fqm/kernels.hpp"

#include <atomic>

namespace fqm::kernels {

namespace {
std::atomic<bool> g_parallel{true};

// complex multiply-accumulate on raw doubles, avoiding the libgcc
// __muldc3 slow path in hot loops
inline void row_axpy(int64_t n, double ar, double ai, const double* b, double* c) {
    for (int64_t j = 0; j < n; ++j) {
        const double br = b[2 * j], bi = b[2 * j + 1];
        c[2 * j] += ar * br - ai * bi;
        c[2 * j + 1] += ar * bi + ai * br;
    }
}
} // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled); }
bool parallel_enabled() { return g_parallel.load(); }

static void matvec_rows(int64_t n, const cd* a, const cd* x, cd* y, int64_t i) {
    const double* ap = reinterpret_cast<const double*>(a) + 2 * i * n;
    const double* xp = reinterpret_cast<const double*>(x);
    double sr = 0.0, si = 0.0;
    for (int64_t k = 0; k < n; ++k) {
        const double ar = ap[2 * k], ai = ap[2 * k + 1];
        const double xr = xp[2 * k], xi = xp[2 * k + 1];
        sr += ar * xr - ai * xi;
        si += ar * xi + ai * xr;
    }
    y[i] = cd(sr, si);
}

void matvec_serial(int64_t n, const cd* a, const cd* x, cd* y) {
    for (int64_t i = 0; i < n; ++i) matvec_rows(n, a, x, y, i);
}

void matvec_omp(int64_t n, const cd* a, const cd* x, cd* y) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) matvec_rows(n, a, x, y, i);
}

void matvec(int64_t n, const cd* a, const cd* x, cd* y) {
    if (parallel_enabled())
        matvec_omp(n, a, x, y);
    else
        matvec_serial(n, a, x, y);
}

static void matmul_row(int64_t n, const cd* a, const cd* b, cd* c, int64_t i) {
    double* cp = reinterpret_cast<double*>(c) + 2 * i * n;
    const double* ap = reinterpret_cast<const double*>(a) + 2 * i * n;
    const double* bp = reinterpret_cast<const double*>(b);
    for (int64_t j = 0; j < 2 * n; ++j) cp[j] = 0.0;
    for (int64_t k = 0; k < n; ++k)
        row_axpy(n, ap[2 * k], ap[2 * k + 1], bp + 2 * k * n, cp);
}

void matmul_serial(int64_t n, const cd* a, const cd* b, cd* c) {
    for (int64_t i = 0; i < n; ++i) matmul_row(n, a, b, c, i);
}

void matmul_omp(int64_t n, const cd* a, const cd* b, cd* c) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) matmul_row(n, a, b, c, i);
}

void matmul(int64_t n, const cd* a, const cd* b, cd* c) {
    if (parallel_enabled())
        matmul_omp(n, a, b, c);
    else
        matmul_serial(n, a, b, c);
}

static inline void contract_slice(int64_t dim, int64_t stride, const cd* block,
                                  const cd* src, cd* dst, int64_t base) {
    for (int64_t t = 0; t < dim; ++t) {
        double sr = 0.0, si = 0.0;
        const double* bp = reinterpret_cast<const double*>(block) + 2 * t * dim;
        for (int64_t u = 0; u < dim; ++u) {
            const cd v = src[base + u * stride];
            const double br = bp[2 * u], bi = bp[2 * u + 1];
            sr += br * v.real() - bi * v.imag();
            si += br * v.imag() + bi * v.real();
        }
        dst[base + t * stride] = cd(sr, si);
    }
}

void contract_axis_serial(int64_t n, int64_t dim, int64_t stride,
                          const cd* block, const cd* src, cd* dst) {
    const int64_t outer = n / (dim * stride);
    for (int64_t o = 0; o < outer; ++o)
        for (int64_t w = 0; w < stride; ++w)
            contract_slice(dim, stride, block, src, dst, o * dim * stride + w);
}

void contract_axis_omp(int64_t n, int64_t dim, int64_t stride,
                       const cd* block, const cd* src, cd* dst) {
    const int64_t outer = n / (dim * stride);
    const int64_t slices = outer * stride;
#pragma omp parallel for schedule(static)
    for (int64_t idx = 0; idx < slices; ++idx) {
        const int64_t o = idx / stride;
        const int64_t w = idx % stride;
        contract_slice(dim, stride, block, src, dst, o * dim * stride + w);
    }
}

void contract_axis(int64_t n, int64_t dim, int64_t stride,
                   const cd* block, const cd* src, cd* dst) {
    if (parallel_enabled())
        contract_axis_omp(n, dim, stride, block, src, dst);
    else
        contract_axis_serial(n, dim, stride, block, src, dst);
}

void contract_axis_counted(int64_t n, int64_t dim, int64_t stride,
                           const cd* block, const cd* src, cd* dst,
                           uint64_t* madd_count) {
    const int64_t outer = n / (dim * stride);
    uint64_t count = 0;
    for (int64_t o = 0; o < outer; ++o)
        for (int64_t w = 0; w < stride; ++w) {
            const int64_t base = o * dim * stride + w;
            for (int64_t t = 0; t < dim; ++t) {
                cd acc = 0.0;
                for (int64_t u = 0; u < dim; ++u) {
                    acc += block[t * dim + u] * src[base + u * stride];
                    ++count;
                }
                dst[base + t * stride] = acc;
            }
        }
    if (madd_count) *madd_count += count;
}

} // namespace fqm::kernels
