#include <catch2/catch.hpp>

#include "pcode/permutation.hpp"

using namespace pcode;

TEST_CASE("cycle notation round trip") {
    Permutation p = Permutation::parse("(1 2 3)(4 5)", 6);
    CHECK(p.apply(0) == 1);
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(2) == 0);
    CHECK(p.apply(3) == 4);
    CHECK(p.apply(4) == 3);
    CHECK(p.apply(5) == 5);
    CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");

    CHECK(Permutation::identity(4).to_cycle_string() == "()");
    CHECK(Permutation::parse("()", 4) == Permutation::identity(4));
    CHECK(Permutation::parse(" (2 1) ", 3) == Permutation::transposition(3, 0, 1));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Permutation::parse("(1 2", 4), Error);
    CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)", 4), Error);
    CHECK_THROWS_AS(Permutation::parse("(0 1)", 4), Error);
    CHECK_THROWS_AS(Permutation::parse("(1 5)", 4), Error);
    CHECK_THROWS_AS(Permutation::parse("(3)", 4), Error);
    CHECK_THROWS_AS(Permutation::parse("", 4), Error);
    try {
        Permutation::parse("(1 9)", 4);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("composition applies the left factor first") {
    Permutation a = Permutation::parse("(1 2)", 3);
    Permutation b = Permutation::parse("(2 3)", 3);
    Permutation ab = a * b;
    // 1 -> 2 under a, then 2 -> 3 under b
    CHECK(ab.apply(0) == 2);
    CHECK(ab == Permutation::parse("(1 3 2)", 3));
    CHECK(b * a == Permutation::parse("(1 2 3)", 3));
}

TEST_CASE("inverse and involution") {
    Permutation p = Permutation::parse("(1 2 3 4)", 4);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(!p.is_involution());
    CHECK(Permutation::parse("(1 3)(2 4)", 4).is_involution());
    CHECK(!Permutation::identity(4).is_involution());
}

TEST_CASE("order and powers") {
    Permutation p = Permutation::parse("(1 2 3)(4 5)", 6);
    CHECK(p.order() == 6);
    CHECK(perm_power(p, 6).is_identity());
    CHECK(perm_power(p, 3) == Permutation::parse("(4 5)", 6));
    CHECK(Permutation::identity(5).order() == 1);
}

TEST_CASE("conjugation relabels points") {
    Permutation p = Permutation::parse("(1 2)", 4);
    Permutation x = Permutation::parse("(1 3)", 4);
    CHECK(p.conjugated_by(x) == Permutation::parse("(2 3)", 4));
    // g^x = x^-1 g x under left-factor-first composition
    CHECK(p.conjugated_by(x) == x.inverse() * (p * x));
}

TEST_CASE("max point scan") {
    CHECK(Permutation::max_point("(1 2 12)(4 5)") == 12);
    CHECK(Permutation::max_point("()") == 0);
}
