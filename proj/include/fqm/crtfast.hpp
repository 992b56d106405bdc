#pragma once

#include <optional>

#include "fqm/densemap.hpp"
#include "fqm/heisenberg.hpp"
#include "fqm/modarith.hpp"

namespace fqm {

/// Permutation as index arrays; forward[j] is the image position of j.
/// As a 0/1 matrix, R[forward[j]][j] = 1.
struct PermutationMap {
    int64_t n = 0;
    std::vector<int64_t> forward;
    std::vector<int64_t> inverse;
};

/// The prime-factor index shuffle: global index j goes to the mixed-radix
/// position of its component tuple (j mod N_1, ..., j mod N_k), the same
/// reindexing the prime-factor FFT uses. Two tuple conventions are
/// candidates, plain residues j mod N_i and scaled residues n_i j mod N_i;
/// construction selects the one satisfying R P R^T = P_1 x ... x P_k by an
/// exact integer check and freezes it. The plain-residue convention is the
/// one that passes.
PermutationMap build_R(const SinoContext& ctx);

/// Component Weyl indices under the validated convention: conjugating
/// J_{r,s} by R gives the tensor product of J_{r_i, n_i s_i mod N_i}
/// over the components. The shift index splits plainly, the clock index
/// picks up the CRT coefficient n_i.
std::vector<WeylIndex> weyl_component_indices(WeylIndex idx, const SinoContext& ctx);

/// U(A) in factored form: R^T (U_1 x ... x U_k) R with one small block
/// per coprime component. Blocks are metaplectic operators for the
/// diagonally rescaled factor matrices [[a_i, n_i b_i], [m_i c_i, d_i]],
/// which is what conjugation by R produces; the global phase is folded
/// into the first block so the reconstruction equals build_U(A) itself,
/// not just a unimodular multiple.
struct FactoredMap {
    SinoContext ctx;
    PermutationMap perm;
    std::vector<DenseMap> blocks; // component order, dimension N_i each
};

FactoredMap factor_map(const SL2Element& a, const SinoContext& ctx);

/// Apply the factored operator to a vector in N * sum_i N_i multiply-adds:
/// permute, contract each tensor axis with its block, permute back.
std::vector<cd> apply_factored(const FactoredMap& fm, const std::vector<cd>& v);

/// Serial variant that counts the contraction multiply-adds.
std::vector<cd> apply_factored_counted(const FactoredMap& fm, const std::vector<cd>& v,
                                       uint64_t* madd_count);

/// Kronecker product of the blocks in order. Refuses totals above 4096.
DenseMap tensor_compose(std::span<const DenseMap> blocks);

/// R^T (blocks tensor) R as a dense matrix, in O(N^2 k).
DenseMap reconstruct_dense(const FactoredMap& fm);

struct BenchReport {
    int64_t n = 0;
    std::vector<int64_t> factors;
    std::optional<double> dense_ns; // absent when N > 4096
    double fast_ns = 0.0;
    std::optional<double> ratio;
    uint64_t madd_count = 0;
};

/// Median-of-repetitions timing of dense matvec against the factored
/// apply on identical seeded random vectors.
BenchReport bench_apply(OddModulus n, const SL2Element& a, int repetitions,
                        uint64_t seed = 0);

} // namespace fqm
