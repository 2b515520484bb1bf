#include "anyonsim/braid.hpp"

#include "test_util.hpp"

using namespace anyonsim;
using testutil::max_abs;

TEST_CASE("parse_word reads signed integers") {
    const BraidWord w = parse_word("1 -2  +1", 3);
    CHECK(w.letters == std::vector<int>{1, -2, 1});
    CHECK(w.to_string() == "1 -2 1");
    CHECK(parse_word("", 4).empty());
    CHECK(parse_word("  \t", 4).empty());
}

TEST_CASE("parse_word rejects bad tokens") {
    REQUIRE_CODE(parse_word("1 x", 3), MalformedToken);
    REQUIRE_CODE(parse_word("1.5", 3), MalformedToken);
    REQUIRE_CODE(parse_word("0", 3), MalformedToken);
    REQUIRE_CODE(parse_word("3", 3), IndexOutOfRange);
    REQUIRE_CODE(parse_word("-3", 3), IndexOutOfRange);
}

TEST_CASE("free reduction and inverse") {
    CHECK(free_reduce(parse_word("1 -1 2", 3)).letters == std::vector<int>{2});
    CHECK(free_reduce(parse_word("1 2 -2 -1", 3)).empty());
    CHECK(free_reduce(parse_word("1 2 1", 3)).letters == std::vector<int>{1, 2, 1});
    CHECK(inverse(parse_word("1 -2 2", 3)).letters == std::vector<int>{-2, 2, -1});
}

TEST_CASE("leftmost letter acts first") {
    Matrix x(2, 2), h(2, 2);
    x << 0, 1, 1, 0;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    const Representation rep("xh", 3, {x, h});
    CHECK(max_abs(word_unitary(rep, parse_word("1 2", 3)) - h * x) < 1e-15);
    CHECK(max_abs(word_unitary(rep, parse_word("-2", 3)) - h.adjoint()) < 1e-15);
    CHECK(max_abs(word_unitary(rep, BraidWord({}, 3)) - Matrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("representation validation") {
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = 2.0;
    REQUIRE_CODE(Representation("bad", 2, {bad}), NotUnitary);
    REQUIRE_CODE(Representation("short", 3, {Matrix::Identity(2, 2)}), DimensionMismatch);
    REQUIRE_CODE(Representation("mixed", 3, {Matrix::Identity(2, 2), Matrix::Identity(3, 3)}), DimensionMismatch);
    const Representation ok = abelian_rep(0.3, 4);
    REQUIRE_CODE(ok.generator(4), IndexOutOfRange);
    REQUIRE_CODE(word_unitary(ok, parse_word("1", 3)), DimensionMismatch);
}

TEST_CASE("abelian representation satisfies the relations") {
    const RelationReport r = check_relations(abelian_rep(0.7, 6));
    CHECK(r.pass);
    CHECK(r.max_commutation_defect < 1e-15);
    CHECK(r.max_yang_baxter_defect < 1e-15);
}

TEST_CASE("generic unitaries violate Yang-Baxter") {
    std::mt19937_64 rng(5);
    const Representation rep("random", 3, {testutil::random_unitary(3, rng), testutil::random_unitary(3, rng)});
    const RelationReport r = check_relations(rep);
    CHECK_FALSE(r.pass);
    CHECK(r.max_yang_baxter_defect > 1e-3);
}
