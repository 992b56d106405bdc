#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fqm/modarith.hpp"
#include "fqm/rng.hpp"

using namespace fqm;

TEST_CASE("mod_inverse basics") {
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(5, 3) == 2); // 5*2 = 10 = 1 mod 3
    CHECK_THROWS_AS(mod_inverse(3, 9), NonInvertibleError);
    for (int64_t m : {3, 9, 15, 49}) {
        for (int64_t a = 1; a < m; ++a) {
            if (gcd64(a, m) != 1) continue;
            CHECK(mul_mod(a, mod_inverse(a, m), m) == 1);
        }
    }
}

TEST_CASE("odd modulus validation") {
    CHECK_THROWS_AS(OddModulus(4), EvenModulusError);
    CHECK_THROWS_AS(OddModulus(1), Error);
    CHECK(OddModulus(3).value() == 3);
}

TEST_CASE("factor_odd") {
    auto f15 = factor_odd(OddModulus(15));
    REQUIRE(f15.factors.size() == 2);
    CHECK(f15.factors[0].prime == 3);
    CHECK(f15.factors[0].exponent == 1);
    CHECK(f15.factors[1].prime == 5);

    auto f45 = factor_odd(OddModulus(45));
    REQUIRE(f45.factors.size() == 2);
    CHECK(f45.factors[0].value == 9);
    CHECK(f45.factors[1].value == 5);

    auto f9 = factor_odd(OddModulus(9));
    REQUIRE(f9.factors.size() == 1);
    CHECK(f9.factors[0].prime == 3);
    CHECK(f9.factors[0].exponent == 2);

    for (int64_t n : {9, 15, 21, 45, 105, 1155}) {
        int64_t prod = 1;
        int64_t last_prime = 0;
        for (const auto& f : factor_odd(OddModulus(n)).factors) {
            CHECK(f.prime > last_prime);
            last_prime = f.prime;
            prod *= f.value;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("sino context coefficients") {
    SinoContext c15{OddModulus(15)};
    REQUIRE(c15.size() == 2);
    CHECK(c15.components()[0].modulus == 3);
    CHECK(c15.components()[0].cofactor == 5);
    CHECK(c15.components()[0].cofactor_inverse == 2);
    CHECK(c15.components()[1].modulus == 5);
    CHECK(c15.components()[1].cofactor == 3);
    CHECK(c15.components()[1].cofactor_inverse == 2);

    SinoContext c9{OddModulus(9)};
    REQUIRE(c9.size() == 1);
    CHECK(c9.components()[0].cofactor == 1);
    CHECK(c9.components()[0].cofactor_inverse == 1);

    SinoContext c105{OddModulus(105)};
    REQUIRE(c105.size() == 3);
    CHECK(c105.components()[0].cofactor == 35);
    CHECK(c105.components()[0].cofactor_inverse == 2);
    CHECK(c105.components()[1].cofactor == 21);
    CHECK(c105.components()[1].cofactor_inverse == 1);
    CHECK(c105.components()[2].cofactor == 15);
    CHECK(c105.components()[2].cofactor_inverse == 1);
}

TEST_CASE("sino decompose/recompose") {
    SinoContext ctx{OddModulus(15)};
    CHECK(sino_decompose(7, ctx) == std::vector<int64_t>{1, 2});
    CHECK(sino_decompose(0, ctx) == std::vector<int64_t>{0, 0});
    const std::vector<int64_t> parts{1, 2};
    CHECK(sino_recompose(parts, ctx) == 7); // 1*5*2 + 2*3*2 = 22 = 7 mod 15
    CHECK_THROWS_AS(sino_decompose(15, ctx), OutOfRangeError);
    CHECK_THROWS_AS(sino_decompose(-1, ctx), OutOfRangeError);
    const std::vector<int64_t> bad{3, 0};
    CHECK_THROWS_AS(sino_recompose(bad, ctx), OutOfRangeError);
}

TEST_CASE("CRT bijection and ring homomorphism, exhaustive") {
    for (int64_t n : {9, 15, 21, 45, 105}) {
        SinoContext ctx{OddModulus(n)};
        std::set<std::vector<int64_t>> seen;
        for (int64_t r = 0; r < n; ++r) {
            const auto parts = sino_decompose(r, ctx);
            CHECK(sino_recompose(parts, ctx) == r);
            CHECK(seen.insert(parts).second);
        }
        Rng rng(1);
        for (int t = 0; t < 200; ++t) {
            const int64_t r = rng.below(n), q = rng.below(n);
            const auto pr = sino_decompose(r, ctx), pq = sino_decompose(q, ctx);
            const auto prod = sino_decompose(mul_mod(r, q, n), ctx);
            const auto sum = sino_decompose(add_mod(r, q, n), ctx);
            for (size_t i = 0; i < ctx.size(); ++i) {
                const int64_t ni = ctx.components()[i].modulus;
                CHECK(prod[i] == mul_mod(pr[i], pq[i], ni));
                CHECK(sum[i] == add_mod(pr[i], pq[i], ni));
            }
        }
    }
}

TEST_CASE("SL2 construction and arithmetic") {
    OddModulus n15(15);
    CHECK_THROWS_AS(SL2Element(1, 0, 0, 2, n15), Error);    // det 2
    CHECK_THROWS_AS(SL2Element(4, 3, 3, 7, n15), Error);    // det 19 = 4 mod 15
    const SL2Element a(1, 1, 1, 2, n15);
    CHECK(a * a.inverse() == SL2Element::identity(n15));
    CHECK(a.power(0) == SL2Element::identity(n15));
    CHECK(a.power(3) == a * a * a);
    const SL2Element s = SL2Element::rotation(n15);
    CHECK(s.power(4) == SL2Element::identity(n15));
    CHECK((a.negated() == SL2Element(-1, -1, -1, -2, n15)));
    // row action
    const auto [r, sx] = a.act_row(1, 0);
    CHECK(r == 1);
    CHECK(sx == 1);
}

TEST_CASE("crt_split_sl2 and crt_join_sl2") {
    OddModulus n15(15);
    SinoContext ctx{n15};
    const SL2Element a(1, 1, 1, 2, n15);
    const auto parts = crt_split_sl2(a, ctx);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == SL2Element(1, 1, 1, 2, OddModulus(3)));
    CHECK(parts[1] == SL2Element(1, 1, 1, 2, OddModulus(5)));
    CHECK(crt_join_sl2(parts, ctx) == a);

    const auto ids = crt_split_sl2(SL2Element::identity(n15), ctx);
    CHECK(crt_join_sl2(ids, ctx) == SL2Element::identity(n15));

    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        const SL2Element x = random_sl2(rng, n15);
        CHECK(crt_join_sl2(crt_split_sl2(x, ctx), ctx) == x);
        const SL2Element y = random_sl2(rng, n15);
        const auto px = crt_split_sl2(x, ctx), py = crt_split_sl2(y, ctx);
        const auto pxy = crt_split_sl2(x * y, ctx);
        for (size_t i = 0; i < ctx.size(); ++i) CHECK(pxy[i] == px[i] * py[i]);
    }
}

TEST_CASE("embedded factor has the Sino form ((a1,1),(b1,0),(c1,0),(d1,1))") {
    OddModulus n15(15);
    SinoContext ctx{n15};
    const SL2Element a1(2, 1, 1, 1, OddModulus(3));
    const SL2Element id5 = SL2Element::identity(OddModulus(5));
    std::vector<SL2Element> slots{a1, id5};
    const SL2Element embedded = crt_join_sl2(slots, ctx);
    CHECK(sino_decompose(embedded.a(), ctx) == std::vector<int64_t>{a1.a(), 1});
    CHECK(sino_decompose(embedded.b(), ctx) == std::vector<int64_t>{a1.b(), 0});
    CHECK(sino_decompose(embedded.c(), ctx) == std::vector<int64_t>{a1.c(), 0});
    CHECK(sino_decompose(embedded.d(), ctx) == std::vector<int64_t>{a1.d(), 1});
}

TEST_CASE("embedded factors commute and reassemble, exhaustive at N=15") {
    OddModulus n15(15);
    SinoContext ctx{n15};
    const auto all = enumerate_sl2(n15);
    CHECK(all.size() == 2880); // |SL(2,Z_15)|
    for (const auto& a : all) {
        const auto parts = crt_split_sl2(a, ctx);
        std::vector<SL2Element> s1{parts[0], SL2Element::identity(OddModulus(5))};
        std::vector<SL2Element> s2{SL2Element::identity(OddModulus(3)), parts[1]};
        const SL2Element a1 = crt_join_sl2(s1, ctx);
        const SL2Element a2 = crt_join_sl2(s2, ctx);
        REQUIRE(a1 * a2 == a);
        REQUIRE(a2 * a1 == a);
    }
}

TEST_CASE("O2 predicate") {
    OddModulus n15(15);
    CHECK(is_in_O2(SL2Element::identity(n15)));
    CHECK(is_in_O2(SL2Element(0, 1, -1, 0, n15)));
    CHECK_FALSE(is_in_O2(SL2Element(1, 1, 0, 1, n15)));
}

TEST_CASE("O2(15) closure and factorization") {
    OddModulus n15(15);
    SinoContext ctx{n15};
    std::vector<SL2Element> o2;
    for (int64_t a = 0; a < 15; ++a)
        for (int64_t b = 0; b < 15; ++b)
            if (add_mod(mul_mod(a, a, 15), mul_mod(b, b, 15), 15) == 1)
                o2.emplace_back(a, b, canonical_mod(-b, 15), a, n15);
    CHECK(o2.size() > 4);
    for (const auto& x : o2)
        for (const auto& y : o2) CHECK(is_in_O2(x * y));
    for (const auto& x : o2) {
        const auto parts = crt_split_sl2(x, ctx);
        std::vector<SL2Element> s1{parts[0], SL2Element::identity(OddModulus(5))};
        std::vector<SL2Element> s2{SL2Element::identity(OddModulus(3)), parts[1]};
        const SL2Element e1 = crt_join_sl2(s1, ctx);
        const SL2Element e2 = crt_join_sl2(s2, ctx);
        CHECK(is_in_O2(e1));
        CHECK(is_in_O2(e2));
        CHECK(e1 * e2 == x);
    }
}
