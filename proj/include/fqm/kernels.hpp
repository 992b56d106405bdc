#pragma once

#include <complex>
#include <cstdint>

namespace fqm::kernels {

using cd = std::complex<double>;

/// Runtime switch between the OpenMP kernels and the serial references.
/// Parallel is the default; the serial variants are kept both for testing
/// and for instrumented runs. Every kernel assigns each output element to
/// exactly one thread with a fixed summation order, so the two variants
/// produce bit-identical results.
void set_parallel(bool enabled);
bool parallel_enabled();

// y = A x, A is n x n row-major
void matvec_serial(int64_t n, const cd* a, const cd* x, cd* y);
void matvec_omp(int64_t n, const cd* a, const cd* x, cd* y);
void matvec(int64_t n, const cd* a, const cd* x, cd* y);

// C = A B, all n x n row-major; C must not alias A or B
void matmul_serial(int64_t n, const cd* a, const cd* b, cd* c);
void matmul_omp(int64_t n, const cd* a, const cd* b, cd* c);
void matmul(int64_t n, const cd* a, const cd* b, cd* c);

// Contract one tensor axis of a reshaped length-n vector with a small
// dense block: dst[..., t, ...] = sum_u block[t][u] src[..., u, ...].
// `stride` is the distance between consecutive values of the contracted
// axis, `dim` its extent; n = outer * dim * stride.
void contract_axis_serial(int64_t n, int64_t dim, int64_t stride,
                          const cd* block, const cd* src, cd* dst);
void contract_axis_omp(int64_t n, int64_t dim, int64_t stride,
                       const cd* block, const cd* src, cd* dst);
void contract_axis(int64_t n, int64_t dim, int64_t stride,
                   const cd* block, const cd* src, cd* dst);

// Serial contraction that counts every multiply-add performed.
void contract_axis_counted(int64_t n, int64_t dim, int64_t stride,
                           const cd* block, const cd* src, cd* dst,
                           uint64_t* madd_count);

} // namespace fqm::kernels
