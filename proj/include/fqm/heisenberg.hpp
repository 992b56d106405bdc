#pragma once

#include <utility>

#include "fqm/densemap.hpp"
#include "fqm/modarith.hpp"

namespace fqm {

/// Index (r, s) of a Heisenberg group element J_{r,s} = w^{r s/2} P^r Q^s,
/// with the half interpreted as multiplication by (N+1)/2 mod N.
struct WeylIndex {
    int64_t r = 0;
    int64_t s = 0;
    bool operator==(const WeylIndex&) const = default;
};

/// Table of the N-th roots of unity, w^t = exp(2 pi i t / N). All phase
/// exponents in the library are reduced mod N in exact integer arithmetic
/// before the table is consulted.
class PhaseTable {
public:
    explicit PhaseTable(int64_t n);
    int64_t modulus() const { return n_; }
    cd operator()(int64_t exponent) const { return w_[canonical_mod(exponent, n_)]; }

private:
    int64_t n_;
    std::vector<cd> w_;
};

/// (N+1)/2, the inverse of 2 mod odd N.
inline int64_t half_mod(int64_t n) { return (n + 1) / 2; }

/// The clock matrix Q = diag(1, w, ..., w^{N-1}) and the cyclic shift P
/// with P e_j = e_{j+1 mod N} (ones at (j+1 mod N, j)).
std::pair<DenseMap, DenseMap> clock_shift(OddModulus n);

/// Dense J_{r,s}: a permutation matrix with unimodular phases, one
/// nonzero per row.
DenseMap weyl_element(WeylIndex idx, OddModulus n);

/// Columns k = 1..N are the eigenvectors e_k of P with entries
/// w^{k l}/sqrt(N) at row l (0-based); column k has P e_k = w^{-k} e_k.
/// The last column (k = N) is the uniform vector.
DenseMap fourier_basis(OddModulus n);

} // namespace fqm
