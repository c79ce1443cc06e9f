#include <doctest.h>

#include "tbl/polynomial.hpp"

using namespace tbl;

TEST_CASE("infix parsing and printing") {
    Poly f = Poly::parse("x1^2 + 1", 1);
    CHECK(f.to_string() == "x1^2 + 1");
    CHECK(Poly::parse("(x1 - 1) * (x1 + 1)", 1) == Poly::parse("x1^2 - 1", 1));
    CHECK(Poly::parse("-x1 * -x1", 1) == Poly::parse("x1^2", 1));
    CHECK(Poly::parse("2*x1*x2 - 3", 2).to_string() == "2*x1*x2 - 3");
    CHECK(Poly::parse("7", 1).is_constant());

    CHECK_THROWS_AS(Poly::parse("x2", 1), Error);
    CHECK_THROWS_AS(Poly::parse("x1 +", 1), Error);
    CHECK_THROWS_AS(Poly::parse("x1 ) ", 1), Error);
}

TEST_CASE("evaluation at p-adic points") {
    long p = 5;
    std::vector<PAdic> at_p = {PAdic::make(p, 16, 5)};
    CHECK(Poly::parse("x1", 1).eval(at_p, p, 16).valuation() == 1);

    std::vector<PAdic> at_1 = {PAdic::make(p, 16, 1)};
    CHECK(Poly::parse("x1 - 1", 1).eval(at_1, p, 16).is_zero());

    std::vector<PAdic> at_2 = {PAdic::make(p, 16, 2)};
    PAdic v = Poly::parse("x1^2 + 1", 1).eval(at_2, p, 16);
    CHECK(v.valuation() == 1);
    CHECK(v.unit_residue() == 1);
}

TEST_CASE("evaluation mod p") {
    Poly f = Poly::parse("x1^2 - x2", 2);
    CHECK(f.eval_mod_p({3, 2}, 7) == 0);
    CHECK(f.eval_mod_p({3, 1}, 7) == 1);
    CHECK(f.eval_mod_p({-1, 0}, 7) == 1);
}

TEST_CASE("exact division") {
    Poly f = Poly::parse("x1^2 - 1", 1);
    auto q = f.exact_divide(Poly::parse("x1 - 1", 1));
    REQUIRE(q.has_value());
    CHECK(*q == Poly::parse("x1 + 1", 1));
    CHECK_FALSE(f.exact_divide(Poly::parse("x1 - 2", 1)).has_value());
    CHECK_FALSE(Poly::parse("2*x1", 1).exact_divide(Poly::parse("4", 1)).has_value());

    // multivariate
    Poly g = Poly::parse("x1*x2 + x2^2", 2);
    auto q2 = g.exact_divide(Poly::parse("x2", 2));
    REQUIRE(q2.has_value());
    CHECK(*q2 == Poly::parse("x1 + x2", 2));
}

TEST_CASE("content and derivative") {
    CHECK(Poly::parse("6*x1 + 9", 1).content() == 3);
    CHECK(Poly::parse("x1^3", 1).derivative(0) == Poly::parse("3*x1^2", 1));
    CHECK(Poly::parse("5", 1).derivative(0).is_zero());
}

TEST_CASE("squarefreeness mod p") {
    CHECK(squarefree_mod_p(Poly::parse("x1^2 - 2", 1), 7));
    CHECK_FALSE(squarefree_mod_p(Poly::parse("x1^2", 1), 7));
    CHECK_FALSE(squarefree_mod_p(Poly::parse("x1^2 - 2", 1), 2)); // degenerates mod 2
    CHECK(squarefree_mod_p(Poly::parse("x1^2 - 2", 1), 3));
    CHECK_FALSE(squarefree_mod_p(Poly::parse("x1^2 + 2*x1 + 1", 1), 5));
}
