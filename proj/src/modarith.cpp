#include "fqm/modarith.hpp"

#include <numeric>

namespace fqm {

int64_t canonical_mod(int64_t x, int64_t m) {
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    a = canonical_mod(a, m);
    b = canonical_mod(b, m);
    return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t add_mod(int64_t a, int64_t b, int64_t m) {
    return canonical_mod(canonical_mod(a, m) + canonical_mod(b, m), m);
}

int64_t sub_mod(int64_t a, int64_t b, int64_t m) {
    return canonical_mod(canonical_mod(a, m) - canonical_mod(b, m), m);
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
    int64_t result = 1 % m;
    int64_t b = canonical_mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

int64_t gcd64(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

int64_t mod_inverse(int64_t a, int64_t m) {
    if (m < 2) throw Error("mod_inverse: modulus must be >= 2");
    a = canonical_mod(a, m);
    // extended Euclid on (a, m)
    int64_t old_r = a, r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw NonInvertibleError("mod_inverse: gcd(" + std::to_string(a) + ", " +
                                 std::to_string(m) + ") != 1");
    return canonical_mod(old_s, m);
}

OddModulus::OddModulus(int64_t n) : n_(n) {
    if (n % 2 == 0) throw EvenModulusError("modulus must be odd, got " + std::to_string(n));
    if (n < 3) throw Error("modulus must be >= 3, got " + std::to_string(n));
}

PrimePowerFactorization factor_odd(OddModulus n) {
    PrimePowerFactorization result;
    result.modulus = n.value();
    int64_t rest = n.value();
    for (int64_t p = 3; p * p <= rest; p += 2) {
        if (rest % p != 0) continue;
        PrimePowerFactor f{p, 0, 1};
        while (rest % p == 0) {
            rest /= p;
            f.exponent += 1;
            f.value *= p;
        }
        result.factors.push_back(f);
    }
    if (rest > 1) result.factors.push_back({rest, 1, rest});
    return result;
}

SinoContext::SinoContext(OddModulus n) : modulus_(n) {
    const int64_t total = n.value();
    for (const auto& f : factor_odd(n).factors) {
        SinoComponent c;
        c.modulus = f.value;
        c.cofactor = total / f.value;
        c.cofactor_inverse = mod_inverse(c.cofactor, c.modulus);
        components_.push_back(c);
    }
}

int64_t SinoContext::idempotent(size_t i) const {
    const auto& c = components_.at(i);
    return mul_mod(c.cofactor, c.cofactor_inverse, modulus_.value());
}

std::vector<int64_t> sino_decompose(int64_t r, const SinoContext& ctx) {
    if (r < 0 || r >= ctx.value())
        throw OutOfRangeError("sino_decompose: residue " + std::to_string(r) +
                              " not in [0, " + std::to_string(ctx.value()) + ")");
    std::vector<int64_t> parts;
    parts.reserve(ctx.size());
    for (const auto& c : ctx.components()) parts.push_back(r % c.modulus);
    return parts;
}

int64_t sino_recompose(std::span<const int64_t> parts, const SinoContext& ctx) {
    if (parts.size() != ctx.size())
        throw OutOfRangeError("sino_recompose: expected " + std::to_string(ctx.size()) +
                              " parts, got " + std::to_string(parts.size()));
    const int64_t n = ctx.value();
    int64_t acc = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& c = ctx.components()[i];
        if (parts[i] < 0 || parts[i] >= c.modulus)
            throw OutOfRangeError("sino_recompose: part " + std::to_string(parts[i]) +
                                  " not in [0, " + std::to_string(c.modulus) + ")");
        acc = add_mod(acc, mul_mod(parts[i], ctx.idempotent(i), n), n);
    }
    return acc;
}

SL2Element::SL2Element(int64_t a, int64_t b, int64_t c, int64_t d, OddModulus modulus)
    : a_(canonical_mod(a, modulus.value())),
      b_(canonical_mod(b, modulus.value())),
      c_(canonical_mod(c, modulus.value())),
      d_(canonical_mod(d, modulus.value())),
      modulus_(modulus) {
    const int64_t n = modulus.value();
    const int64_t det = sub_mod(mul_mod(a_, d_, n), mul_mod(b_, c_, n), n);
    if (det != 1 % n)
        throw Error("determinant must be 1 mod N (got " + std::to_string(det) +
                    " mod " + std::to_string(n) + ")");
}

SL2Element SL2Element::operator*(const SL2Element& rhs) const {
    if (!(modulus_ == rhs.modulus_)) throw DimensionMismatchError("SL2Element: modulus mismatch");
    const int64_t n = modulus_.value();
    return SL2Element(add_mod(mul_mod(a_, rhs.a_, n), mul_mod(b_, rhs.c_, n), n),
                      add_mod(mul_mod(a_, rhs.b_, n), mul_mod(b_, rhs.d_, n), n),
                      add_mod(mul_mod(c_, rhs.a_, n), mul_mod(d_, rhs.c_, n), n),
                      add_mod(mul_mod(c_, rhs.b_, n), mul_mod(d_, rhs.d_, n), n),
                      modulus_);
}

SL2Element SL2Element::inverse() const {
    // adjugate; determinant is 1
    return SL2Element(d_, -b_, -c_, a_, modulus_);
}

SL2Element SL2Element::power(int64_t k) const {
    if (k < 0) throw Error("SL2Element::power: negative exponent");
    SL2Element acc = identity(modulus_);
    SL2Element base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

SL2Element SL2Element::negated() const {
    return SL2Element(-a_, -b_, -c_, -d_, modulus_);
}

SL2Element SL2Element::reduced(OddModulus smaller) const {
    if (modulus_.value() % smaller.value() != 0)
        throw Error("SL2Element::reduced: target modulus must divide source");
    return SL2Element(a_, b_, c_, d_, smaller);
}

std::pair<int64_t, int64_t> SL2Element::act_row(int64_t r, int64_t s) const {
    const int64_t n = modulus_.value();
    return {add_mod(mul_mod(r, a_, n), mul_mod(s, c_, n), n),
            add_mod(mul_mod(r, b_, n), mul_mod(s, d_, n), n)};
}

SL2Element SL2Element::identity(OddModulus n) {
    return SL2Element(1, 0, 0, 1, n);
}

SL2Element SL2Element::rotation(OddModulus n) {
    return SL2Element(0, 1, -1, 0, n);
}

std::vector<SL2Element> crt_split_sl2(const SL2Element& a, const SinoContext& ctx) {
    if (!(a.modulus() == ctx.modulus())) throw DimensionMismatchError("crt_split_sl2: modulus mismatch");
    std::vector<SL2Element> parts;
    parts.reserve(ctx.size());
    for (const auto& c : ctx.components()) parts.push_back(a.reduced(OddModulus(c.modulus)));
    return parts;
}

SL2Element crt_join_sl2(std::span<const SL2Element> parts, const SinoContext& ctx) {
    if (parts.size() != ctx.size())
        throw OutOfRangeError("crt_join_sl2: expected " + std::to_string(ctx.size()) + " parts");
    std::vector<int64_t> as, bs, cs, ds;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].modulus().value() != ctx.components()[i].modulus)
            throw OutOfRangeError("crt_join_sl2: part modulus mismatch");
        as.push_back(parts[i].a());
        bs.push_back(parts[i].b());
        cs.push_back(parts[i].c());
        ds.push_back(parts[i].d());
    }
    return SL2Element(sino_recompose(as, ctx), sino_recompose(bs, ctx),
                      sino_recompose(cs, ctx), sino_recompose(ds, ctx), ctx.modulus());
}

bool is_in_O2(const SL2Element& a) {
    const int64_t n = a.modulus().value();
    if (a.d() != a.a()) return false;
    if (a.c() != canonical_mod(-a.b(), n)) return false;
    const int64_t norm = add_mod(mul_mod(a.a(), a.a(), n), mul_mod(a.b(), a.b(), n), n);
    return norm == 1 % n;
}

} // namespace fqm
