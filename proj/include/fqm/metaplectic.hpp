#pragma once

#include "fqm/densemap.hpp"
#include "fqm/heisenberg.hpp"
#include "fqm/modarith.hpp"

namespace fqm {

/// Quadratic Gauss sum sigma(x) = (1/sqrt(N)) sum_r w^{x r^2},
/// by direct summation with exact exponent reduction.
cd gauss_sum(int64_t x, OddModulus n);

/// delta = 2 - a - d mod N. The Weyl-Fourier formula needs it invertible.
int64_t delta(const SL2Element& a);

/// A = S^k * reduced with delta(reduced) invertible mod the element's
/// modulus, k minimal in {0,1,2,3}. For an odd prime power such a k
/// always exists (k <= 2 in fact); for composite moduli it may not,
/// in which case NonInvertibleError is thrown.
struct TrickNormalization {
    int k = 0;
    SL2Element reduced;
};
TrickNormalization trick_normalize(const SL2Element& a);

/// Metaplectic operator for A over an odd prime power, via the
/// Weyl-Fourier sum with the S-trick. Throws NotPrimePowerError when the
/// element's modulus is composite.
DenseMap build_U_prime_power(const SL2Element& a);

/// Canonical build for any odd N: split A into its prime-power factors
/// and multiply the commuting embedded factor operators, each a
/// Weyl-Fourier sum over the Sino-embedded index sublattice.
DenseMap build_U(const SL2Element& a, const SinoContext& ctx);
DenseMap build_U(const SL2Element& a);

/// One row of build_U(A) in O(N * sum N_i^2) without densifying.
std::vector<cd> build_U_row(const SL2Element& a, const SinoContext& ctx, int64_t row);

/// The mod-N Weyl-Fourier formula applied directly, without the CRT
/// split. Cross-check path: requires some S^k normalization to make
/// delta invertible mod N itself, which can fail for composite N.
DenseMap build_U_direct(const SL2Element& a);

/// Independent oracle: the unique (up to scale) solution M of
/// J_{r,s} M = M J_{(r,s)A}, found by group-averaging a generic seed
/// matrix. Normalized unitary with the first significant entry of the
/// row-major scan made real positive.
DenseMap oracle_U(const SL2Element& a);

/// max over (r,s) of || U^-1 J_{r,s} U - J_{(r,s)A} ||_inf.
double intertwine_residual(const DenseMap& u, const SL2Element& a);

/// Same residual restricted to the given index pairs.
double intertwine_residual(const DenseMap& u, const SL2Element& a,
                           std::span<const WeylIndex> indices);

/// The scalar c with ua * ub ~ c * uab, read off at the largest entry
/// of uab.
cd cocycle_phase(const DenseMap& ua, const DenseMap& ub, const DenseMap& uab);

} // namespace fqm
