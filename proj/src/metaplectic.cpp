#include "fqm/metaplectic.hpp"

#include <cmath>

#include "fqm/kernels.hpp"
#include "fqm/rng.hpp"
#include "sparse_weyl.hpp"

namespace fqm {

cd gauss_sum(int64_t x, OddModulus n) {
    const int64_t N = n.value();
    const PhaseTable w(N);
    x = canonical_mod(x, N);
    cd acc = 0.0;
    for (int64_t r = 0; r < N; ++r) acc += w(mul_mod(x, mul_mod(r, r, N), N));
    return acc / std::sqrt(static_cast<double>(N));
}

int64_t delta(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    return sub_mod(2, add_mod(a.a(), a.d(), n), n);
}

TrickNormalization trick_normalize(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    const SL2Element s_inv = SL2Element::rotation(a.modulus()).inverse();
    SL2Element reduced = a;
    for (int k = 0; k <= 3; ++k) {
        if (gcd64(delta(reduced), n) == 1) return {k, reduced};
        reduced = s_inv * reduced;
    }
    throw NonInvertibleError("trick_normalize: no k in 0..3 makes delta invertible mod " +
                             std::to_string(n));
}

namespace {

// One commuting factor of the composite build: the Weyl-Fourier sum of M
// over the Sino-embedded sublattice {(r e_i, s e_i)} of Z_N x Z_N, stored
// by its nonzero values vals[r * N + j] = E[(j + r e_i) mod N][j].
// With a single component (m = minv = e = 1) this is the plain mod-N
// Weyl-Fourier operator.
struct EmbeddedOp {
    int64_t n = 0;  // ambient dimension N
    int64_t ni = 0; // component modulus N_i
    int64_t e = 1;  // idempotent m_i n_i mod N
    std::vector<cd> vals;

    DenseMap to_dense() const {
        DenseMap out(n);
        for (int64_t r = 0; r < ni; ++r) {
            const int64_t off = mul_mod(r, e, n);
            for (int64_t j = 0; j < n; ++j) {
                int64_t i2 = j + off;
                if (i2 >= n) i2 -= n;
                out.at(i2, j) = vals[r * n + j];
            }
        }
        return out;
    }

    // x <- x * E, row by row
    void right_multiply(DenseMap& x) const {
        std::vector<int64_t> off(ni);
        for (int64_t r = 0; r < ni; ++r) off[r] = mul_mod(r, e, n);
#pragma omp parallel
        {
            std::vector<cd> tmp(n);
#pragma omp for schedule(static)
            for (int64_t i2 = 0; i2 < n; ++i2) {
                cd* row = x.data() + i2 * n;
                std::copy(row, row + n, tmp.begin());
                for (int64_t j = 0; j < n; ++j) {
                    cd acc = 0.0;
                    for (int64_t r = 0; r < ni; ++r) {
                        int64_t src = j + off[r];
                        if (src >= n) src -= n;
                        acc += tmp[src] * vals[r * n + j];
                    }
                    row[j] = acc;
                }
            }
        }
    }

    // w <- w * E for a row vector
    void row_apply(std::vector<cd>& w) const {
        std::vector<cd> tmp = w;
        for (int64_t j = 0; j < n; ++j) {
            cd acc = 0.0;
            for (int64_t r = 0; r < ni; ++r) {
                int64_t src = j + mul_mod(r, e, n);
                if (src >= n) src -= n;
                acc += tmp[src] * vals[r * n + j];
            }
            w[j] = acc;
        }
    }
};

// Weyl-Fourier sum for the factor matrix m_el (mod N_i) embedded in
// dimension N. Requires delta(m_el) invertible mod N_i.
EmbeddedOp make_embedded(const SL2Element& m_el, int64_t n, int64_t ni, int64_t m,
                         int64_t minv, const PhaseTable& w) {
    EmbeddedOp op;
    op.n = n;
    op.ni = ni;
    op.e = mul_mod(m, minv, n);
    op.vals.assign(static_cast<size_t>(ni) * n, cd(0.0, 0.0));

    const int64_t d = delta(m_el);
    const int64_t inv2d = mod_inverse(mul_mod(2, d, ni), ni);
    const int64_t qb = m_el.b();
    const int64_t qda = sub_mod(m_el.d(), m_el.a(), ni);
    const int64_t qc = m_el.c();
    const int64_t half = half_mod(n);

    const OddModulus comp_mod(ni);
    const cd pref = gauss_sum(minv, comp_mod) * gauss_sum(mul_mod(minv, d, ni), comp_mod) /
                    static_cast<double>(ni);

    for (int64_t r = 0; r < ni; ++r) {
        cd* row = op.vals.data() + r * n;
        for (int64_t s = 0; s < ni; ++s) {
            // phase of the term coef(r,s) J_{r e, s e}, as a single
            // exponent mod N
            const int64_t quad =
                canonical_mod(mul_mod(qb, mul_mod(r, r, ni), ni) +
                                  mul_mod(qda, mul_mod(r, s, ni), ni) -
                                  mul_mod(qc, mul_mod(s, s, ni), ni),
                              ni);
            const int64_t phi = mul_mod(quad, inv2d, ni);
            int64_t expo = mul_mod(m, mul_mod(minv, phi, ni), n);
            expo = add_mod(expo, mul_mod(mul_mod(r, s, n), mul_mod(op.e, half, n), n), n);
            const cd coef = pref * w(expo);

            const int64_t v = mul_mod(s, op.e, n);
            int64_t jv = 0;
            for (int64_t j = 0; j < n; ++j) {
                row[j] += coef * w(jv);
                jv += v;
                if (jv >= n) jv -= n;
            }
        }
    }
    return op;
}

// The full build plan: per component, k copies of the embedded S factor
// followed by the embedded trick-reduced factor.
std::vector<EmbeddedOp> make_plan(const SL2Element& a, const SinoContext& ctx,
                                  const PhaseTable& w) {
    std::vector<EmbeddedOp> plan;
    const int64_t n = ctx.value();
    for (const auto& comp : ctx.components()) {
        const OddModulus ni_mod(comp.modulus);
        const SL2Element mi = a.reduced(ni_mod);
        const TrickNormalization tn = trick_normalize(mi);
        if (tn.k > 0) {
            const EmbeddedOp s_op = make_embedded(SL2Element::rotation(ni_mod), n, comp.modulus,
                                                  comp.cofactor, comp.cofactor_inverse, w);
            for (int k = 0; k < tn.k; ++k) plan.push_back(s_op);
        }
        plan.push_back(make_embedded(tn.reduced, n, comp.modulus, comp.cofactor,
                                     comp.cofactor_inverse, w));
    }
    return plan;
}

DenseMap run_plan(const std::vector<EmbeddedOp>& plan) {
    DenseMap u = plan.front().to_dense();
    for (size_t i = 1; i < plan.size(); ++i) plan[i].right_multiply(u);
    return u;
}

} // namespace

DenseMap build_U(const SL2Element& a, const SinoContext& ctx) {
    if (!(a.modulus() == ctx.modulus()))
        throw DimensionMismatchError("build_U: context modulus mismatch");
    if (ctx.value() > 4096)
        throw SizeLimitError("build_U: dense operators are capped at N <= 4096");
    const PhaseTable w(ctx.value());
    return run_plan(make_plan(a, ctx, w));
}

DenseMap build_U(const SL2Element& a) {
    return build_U(a, sino_context(a.modulus()));
}

std::vector<cd> build_U_row(const SL2Element& a, const SinoContext& ctx, int64_t row) {
    if (row < 0 || row >= ctx.value()) throw OutOfRangeError("build_U_row: row out of range");
    const PhaseTable w(ctx.value());
    const auto plan = make_plan(a, ctx, w);
    std::vector<cd> v(ctx.value(), cd(0.0, 0.0));
    v[row] = 1.0;
    for (const auto& op : plan) op.row_apply(v);
    return v;
}

DenseMap build_U_prime_power(const SL2Element& a) {
    if (factor_odd(a.modulus()).factors.size() != 1)
        throw NotPrimePowerError("build_U_prime_power: modulus " +
                                 std::to_string(a.modulus().value()) + " is not a prime power");
    return build_U(a, sino_context(a.modulus()));
}

DenseMap build_U_direct(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    if (n > 4096) throw SizeLimitError("build_U_direct: dense operators are capped at N <= 4096");
    const PhaseTable w(n);
    const TrickNormalization tn = trick_normalize(a); // may throw for composite N
    std::vector<EmbeddedOp> plan;
    if (tn.k > 0) {
        const EmbeddedOp s_op = make_embedded(SL2Element::rotation(a.modulus()), n, n, 1, 1, w);
        for (int k = 0; k < tn.k; ++k) plan.push_back(s_op);
    }
    plan.push_back(make_embedded(tn.reduced, n, n, 1, 1, w));
    return run_plan(plan);
}

namespace {

DenseMap schur_average(const SL2Element& a, Rng& rng) {
    const int64_t n = a.modulus().value();
    const PhaseTable w(n);
    DenseMap x(n);
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j) x.at(i, j) = rng.unit_complex();

    DenseMap acc(n), t1(n), t2(n);
    for (int64_t r = 0; r < n; ++r)
        for (int64_t s = 0; s < n; ++s) {
            const SparseWeyl left = SparseWeyl::make({r, s}, n);
            const auto [u, v] = a.act_row(r, s);
            const SparseWeyl right = SparseWeyl::make({-u, -v}, n); // J_{u,v}^{-1}
            left.left_apply(x, t1, w);
            right.right_apply(t1, t2, w);
            for (int64_t i = 0; i < n * n; ++i) acc.data()[i] += t2.data()[i];
        }
    const double scale = 1.0 / static_cast<double>(n * n);
    for (int64_t i = 0; i < n * n; ++i) acc.data()[i] *= scale;
    return acc;
}

double frobenius(const DenseMap& m) {
    double acc = 0.0;
    for (const auto& v : m.values()) acc += std::norm(v);
    return std::sqrt(acc);
}

void normalize_intertwiner(DenseMap& m) {
    const int64_t n = m.dim();
    const double fro = frobenius(m);
    if (fro < 1e-9)
        throw DegenerateSolutionSpaceError("oracle_U: averaged intertwiner vanished");
    const double scale = std::sqrt(static_cast<double>(n)) / fro;
    for (auto i = 0; i < n * n; ++i) m.data()[i] *= scale;

    double peak = max_abs(m);
    for (auto i = 0; i < n * n; ++i) {
        const cd v = m.data()[i];
        if (std::abs(v) > 1e-6 * peak) {
            const cd phase = std::conj(v) / std::abs(v);
            for (auto k = 0; k < n * n; ++k) m.data()[k] *= phase;
            break;
        }
    }
}

} // namespace

DenseMap oracle_U(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    Rng rng(0x9e3779b97f4a7c15ULL);

    DenseMap m = schur_average(a, rng);
    normalize_intertwiner(m);
    const double unit_res = unitarity_residual(m);
    if (unit_res > 1e-6 * static_cast<double>(n))
        throw DegenerateSolutionSpaceError(
            "oracle_U: averaged intertwiner is not unitary, residual " + std::to_string(unit_res));

    // a second seed matrix must give the same intertwiner up to phase
    DenseMap check = schur_average(a, rng);
    normalize_intertwiner(check);
    if (phase_aligned_diff(m, check) > 1e-6 * static_cast<double>(n))
        throw DegenerateSolutionSpaceError("oracle_U: intertwiner space is not one-dimensional");
    return m;
}

double intertwine_residual(const DenseMap& u, const SL2Element& a,
                           std::span<const WeylIndex> indices) {
    const int64_t n = a.modulus().value();
    if (u.dim() != n) throw DimensionMismatchError("intertwine_residual: dimension mismatch");
    const PhaseTable w(n);
    const DenseMap adj_u = adjoint(u);
    const int64_t count = static_cast<int64_t>(indices.size());

    double best = 0.0;
#pragma omp parallel
    {
        DenseMap ju(n), e(n);
        double local = 0.0;
#pragma omp for schedule(dynamic, 4)
        for (int64_t t = 0; t < count; ++t) {
            SparseWeyl::make(indices[t], n).left_apply(u, ju, w);
            kernels::matmul_serial(n, adj_u.data(), ju.data(), e.data());
            const auto [ra, sa] = a.act_row(indices[t].r, indices[t].s);
            const SparseWeyl target = SparseWeyl::make({ra, sa}, n);
            for (int64_t i = 0; i < n; ++i) {
                const int64_t j = canonical_mod(i - target.r, n);
                e.at(i, j) -= target.coef * w(mul_mod(j, target.s, n));
            }
            for (int64_t i = 0; i < n * n; ++i)
                local = std::max(local, std::abs(e.data()[i]));
        }
#pragma omp critical
        best = std::max(best, local);
    }
    return best;
}

double intertwine_residual(const DenseMap& u, const SL2Element& a) {
    const int64_t n = a.modulus().value();
    std::vector<WeylIndex> all;
    all.reserve(static_cast<size_t>(n) * n);
    for (int64_t r = 0; r < n; ++r)
        for (int64_t s = 0; s < n; ++s) all.push_back({r, s});
    return intertwine_residual(u, a, all);
}

cd cocycle_phase(const DenseMap& ua, const DenseMap& ub, const DenseMap& uab) {
    const DenseMap prod = matmul(ua, ub);
    size_t anchor = 0;
    double mag = -1.0;
    for (size_t i = 0; i < uab.values().size(); ++i) {
        const double m = std::abs(uab.values()[i]);
        if (m > mag) {
            mag = m;
            anchor = i;
        }
    }
    return prod.values()[anchor] / uab.values()[anchor];
}

} // namespace fqm
