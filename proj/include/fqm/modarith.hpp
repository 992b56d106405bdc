#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fqm/errors.hpp"

namespace fqm {

/// Canonical representative of x in [0, m).
int64_t canonical_mod(int64_t x, int64_t m);

/// Exact modular product via 128-bit intermediates.
int64_t mul_mod(int64_t a, int64_t b, int64_t m);

int64_t add_mod(int64_t a, int64_t b, int64_t m);
int64_t sub_mod(int64_t a, int64_t b, int64_t m);
int64_t pow_mod(int64_t base, int64_t exp, int64_t m);
int64_t gcd64(int64_t a, int64_t b);

/// Inverse of a mod m by the extended Euclidean algorithm.
/// Throws NonInvertibleError when gcd(a, m) != 1.
int64_t mod_inverse(int64_t a, int64_t m);

/// An odd modulus N >= 3. Every dimension in the library is one of these.
class OddModulus {
public:
    explicit OddModulus(int64_t n);
    int64_t value() const { return n_; }
    bool operator==(const OddModulus&) const = default;

private:
    int64_t n_;
};

struct PrimePowerFactor {
    int64_t prime = 0;
    int exponent = 0;
    int64_t value = 0; // prime^exponent
};

struct PrimePowerFactorization {
    int64_t modulus = 0;
    std::vector<PrimePowerFactor> factors; // strictly increasing primes
};

/// Trial-division factorization of an odd modulus into prime powers.
PrimePowerFactorization factor_odd(OddModulus n);

/// One coprime component N_i of N, with m_i = N/N_i and n_i = m_i^{-1} mod N_i.
struct SinoComponent {
    int64_t modulus = 0;          // N_i
    int64_t cofactor = 0;         // m_i
    int64_t cofactor_inverse = 0; // n_i
};

/// Chinese-remainder context for an odd N: the coprime prime-power
/// components in increasing prime order plus the reconstruction
/// coefficients, so that r = sum_i r_i * m_i * n_i (mod N).
class SinoContext {
public:
    explicit SinoContext(OddModulus n);

    const OddModulus& modulus() const { return modulus_; }
    int64_t value() const { return modulus_.value(); }
    const std::vector<SinoComponent>& components() const { return components_; }
    size_t size() const { return components_.size(); }

    /// m_i * n_i mod N, the idempotent selecting component i.
    int64_t idempotent(size_t i) const;

private:
    OddModulus modulus_;
    std::vector<SinoComponent> components_;
};

inline SinoContext sino_context(OddModulus n) { return SinoContext(n); }

std::vector<int64_t> sino_decompose(int64_t r, const SinoContext& ctx);
int64_t sino_recompose(std::span<const int64_t> parts, const SinoContext& ctx);

/// A 2x2 integer matrix mod N with determinant 1. Entries are kept
/// canonical in [0, N); construction rejects non-unimodular input.
class SL2Element {
public:
    SL2Element(int64_t a, int64_t b, int64_t c, int64_t d, OddModulus modulus);

    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    int64_t c() const { return c_; }
    int64_t d() const { return d_; }
    const OddModulus& modulus() const { return modulus_; }

    SL2Element operator*(const SL2Element& rhs) const;
    SL2Element inverse() const;
    SL2Element power(int64_t k) const; // k >= 0
    SL2Element negated() const;

    /// Entrywise reduction to a divisor modulus.
    SL2Element reduced(OddModulus smaller) const;

    /// Row-vector action (r, s) -> (r a + s c, r b + s d) mod N.
    std::pair<int64_t, int64_t> act_row(int64_t r, int64_t s) const;

    int64_t trace_mod() const { return add_mod(a_, d_, modulus_.value()); }

    static SL2Element identity(OddModulus n);
    /// S = [[0, 1], [-1, 0]], the quarter-turn generator.
    static SL2Element rotation(OddModulus n);

    bool operator==(const SL2Element&) const = default;

private:
    int64_t a_, b_, c_, d_;
    OddModulus modulus_;
};

std::vector<SL2Element> crt_split_sl2(const SL2Element& a, const SinoContext& ctx);
SL2Element crt_join_sl2(std::span<const SL2Element> parts, const SinoContext& ctx);

/// True iff A = [[a, b], [-b, a]] with a^2 + b^2 = 1 mod N.
bool is_in_O2(const SL2Element& a);

} // namespace fqm
