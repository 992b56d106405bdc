#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fqm/json_io.hpp"
#include "fqm/metaplectic.hpp"
#include "fqm/rng.hpp"

using namespace fqm;

TEST_CASE("unitary document round trip") {
    OddModulus n9(9);
    Rng rng(1);
    const DenseMap u = build_U(random_sl2(rng, n9));
    const std::string text = dump_unitary(u);
    const Document doc = parse_document(text);
    REQUIRE(doc.kind == DocKind::unitary);
    CHECK(doc.n == 9);
    CHECK(max_abs_diff(doc.matrix, u) == 0.0);
    // serialization is byte-stable
    CHECK(dump_unitary(doc.matrix) == text);
}

TEST_CASE("vector document round trip") {
    Rng rng(2);
    const auto v = random_vector(rng, 15);
    const Document doc = parse_document(dump_vector(v));
    REQUIRE(doc.kind == DocKind::vector);
    CHECK(max_abs_diff(doc.vec, v) == 0.0);
}

TEST_CASE("sl2 and permutation documents") {
    OddModulus n15(15);
    const SL2Element a(1, 1, 1, 2, n15);
    const Document sd = parse_document(dump_sl2(a));
    REQUIRE(sd.kind == DocKind::sl2);
    CHECK(sd.a == 1);
    CHECK(sd.d == 2);

    SinoContext ctx(n15);
    const Document pd = parse_document(dump_permutation(build_R(ctx)));
    REQUIRE(pd.kind == DocKind::permutation);
    CHECK(pd.permutation == build_R(ctx).forward);
}

TEST_CASE("factored document round trip and validation") {
    OddModulus n15(15);
    SinoContext ctx(n15);
    Rng rng(3);
    const SL2Element a = random_sl2(rng, n15);
    const FactoredMap fm = factor_map(a, ctx);
    const Document doc = parse_document(dump_factored(fm));
    REQUIRE(doc.kind == DocKind::factored);
    const FactoredMap back = to_factored_map(doc);
    const auto v = random_vector(rng, 15);
    CHECK(max_abs_diff(apply_factored(fm, v), apply_factored(back, v)) == 0.0);

    Document broken = doc;
    broken.perm_forward[0] = broken.perm_forward[1];
    CHECK_THROWS_AS(to_factored_map(broken), Error);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_document("not json at all"), Error);
    CHECK_THROWS_AS(parse_document("{\"n\": 3}"), Error);
    CHECK_THROWS_AS(parse_document("{\"kind\":\"unitary\",\"n\":2,\"data\":[[1,0]]}"), Error);
    CHECK_THROWS_AS(parse_document("{\"kind\":\"nope\",\"n\":2}"), Error);
}

TEST_CASE("seventeen significant digits survive the round trip") {
    std::vector<cd> v{cd(1.0 / 3.0, -2.0 / 7.0), cd(1e-300, 12345.678901234567)};
    const Document doc = parse_document(dump_vector(v));
    CHECK(doc.vec[0] == v[0]);
    CHECK(doc.vec[1] == v[1]);
}
