#include <doctest.h>

#include "tbl/divisor_scheme.hpp"

using namespace tbl;

namespace {

constexpr int kPrec = 24;

SchemeModel gm(long p) {
    return SchemeModel(p, 1, {Poly::variable(1, 0)}, true);
}

OPoint pt(long p, const mpz_class& v) {
    return OPoint({PAdic::make(p, kPrec, v)});
}

} // namespace

TEST_CASE("model validation") {
    CHECK_NOTHROW(gm(5));
    CHECK_NOTHROW(SchemeModel(7, 1, {Poly::parse("x1^2 - 2", 1)}, true));
    // content divisible by p
    CHECK_THROWS_AS(SchemeModel(5, 1, {Poly::parse("5*x1", 1)}, true), Error);
    // not squarefree
    CHECK_THROWS_AS(SchemeModel(5, 1, {Poly::parse("x1^2", 1)}, true), Error);
    // x^2 - 2 has a double root mod 7? no: 2 = 3^2 and 3 != -3; but mod 2 it
    // degenerates, which must not matter at p = 7
    CHECK_NOTHROW(SchemeModel(7, 1, {Poly::parse("x1^2 - 2", 1)}, false));
    CHECK_THROWS_AS(SchemeModel(4, 1, {Poly::variable(1, 0)}, true), Error);
    CHECK_THROWS_AS(SchemeModel(5, 1, {Poly::parse("7", 1)}, true), Error);
}

TEST_CASE("multiplicities in the G_m model over Z_5") {
    long p = 5;
    SchemeModel model = gm(p);
    for (long l = 0; l <= 3; ++l) {
        mpz_class u = 3;
        for (long i = 0; i < l; ++i) u *= p;
        CHECK(multiplicity(model, 0, pt(p, u)) == l); // V(x1)
        CHECK(multiplicity(model, 1, pt(p, u)) == 1); // V(p)
    }
}

TEST_CASE("multiplicity along a shifted component") {
    long p = 5;
    SchemeModel model(p, 1, {Poly::parse("x1 - 1", 1)}, true);
    CHECK(multiplicity(model, 0, pt(p, 1 + 125)) == 3);
    CHECK(multiplicity(model, 0, pt(p, 3)) == 0);

    SUBCASE("landing on the component is an error") {
        try {
            multiplicity(model, 0, pt(p, 1));
            FAIL("expected PointOnBoundaryGenerically");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PointOnBoundaryGenerically);
        }
    }
    SUBCASE("exactly known coordinates resolve deep multiplicities") {
        mpz_class deep = 1;
        for (int i = 0; i < 40; ++i) deep *= p;
        CHECK(multiplicity(model, 0, pt(p, 1 + deep)) == 40);
    }
    SUBCASE("indistinguishable from zero at working precision") {
        // build the same coordinate through digit arithmetic, which keeps
        // only 24 digits and cannot see past the cancellation
        mpz_class deep = 1;
        for (int i = 0; i < 40; ++i) deep *= p;
        PAdic inexact = PAdic::make(p, kPrec, 1) + PAdic::make(p, kPrec, deep);
        try {
            multiplicity(model, 0, OPoint({inexact}));
            FAIL("expected PointOnBoundaryGenerically");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PointOnBoundaryGenerically);
        }
    }
}

TEST_CASE("ord of a product is the sum of ords") {
    long p = 7;
    Poly f = Poly::parse("x1 - 1", 1);
    Poly g = Poly::parse("x1 + 1", 1);
    for (long u : {8L, 50L, 6L, 2L}) {
        OPoint x = pt(p, u);
        PAdic fv = eval_poly(f, x), gv = eval_poly(g, x), prod = eval_poly(f * g, x);
        CHECK(prod.valuation() == fv.valuation() + gv.valuation());
    }
}

TEST_CASE("intersection data in the G_m model") {
    long p = 5;
    SchemeModel model = gm(p);

    IntersectionData d1 = intersection_data(model, pt(p, 5));
    CHECK(d1.reduction == std::vector<long>{0});
    CHECK(d1.multiplicity == std::vector<long>{1, 1});
    REQUIRE(d1.unit_residue[0].has_value());
    CHECK(*d1.unit_residue[0] == 1);
    CHECK_FALSE(d1.unit_residue[1].has_value());

    IntersectionData d2 = intersection_data(model, pt(p, 10));
    CHECK(*d2.unit_residue[0] == 2);

    IntersectionData d3 = intersection_data(model, pt(p, 3));
    CHECK(d3.reduction == std::vector<long>{3});
    CHECK(d3.multiplicity == std::vector<long>{0, 1});
    CHECK(*d3.unit_residue[0] == 3);

    CHECK(strong_equiv(d1, intersection_data(model, pt(p, 30))));
    CHECK_FALSE(strong_equiv(d1, d2));
    CHECK_FALSE(strong_equiv(d1, intersection_data(model, pt(p, 25))));
}

TEST_CASE("ideal equality on the affine line") {
    long p = 5;
    CHECK(ideal_equality_a1(PAdic::make(p, kPrec, 5), PAdic::make(p, kPrec, 30)));
    CHECK_FALSE(ideal_equality_a1(PAdic::make(p, kPrec, 5), PAdic::make(p, kPrec, 10)));
    CHECK(ideal_equality_a1(PAdic::make(p, kPrec, 3), PAdic::make(p, kPrec, 3)));
    CHECK_THROWS_AS(ideal_equality_a1(PAdic::zero(p, kPrec), PAdic::make(p, kPrec, 3)), Error);
}

TEST_CASE("ideal equality matches strong equivalence exhaustively") {
    for (long p : {3L, 5L, 7L}) {
        SchemeModel model = gm(p);
        std::vector<mpz_class> values;
        for (long v = 1; v <= 2 * p; ++v) {
            if (v % p == 0) continue;
            for (long l = 0; l <= 3; ++l) {
                mpz_class u = v;
                for (long i = 0; i < l; ++i) u *= p;
                values.push_back(u);
            }
        }
        for (const mpz_class& u1 : values)
            for (const mpz_class& u2 : values) {
                bool ideal = ideal_equality_a1(PAdic::make(p, kPrec, u1), PAdic::make(p, kPrec, u2));
                bool equiv = strong_equiv(intersection_data(model, pt(p, u1)),
                                          intersection_data(model, pt(p, u2)));
                CHECK(ideal == equiv);
            }
    }
}

TEST_CASE("strong equivalence is an equivalence relation on a sample") {
    long p = 7;
    SchemeModel model = gm(p);
    std::vector<IntersectionData> data;
    for (long u : {7L, 14L, 56L, 3L, 10L, 49L, 343L, 21L})
        data.push_back(intersection_data(model, pt(p, u)));
    for (size_t i = 0; i < data.size(); ++i) {
        CHECK(strong_equiv(data[i], data[i]));
        for (size_t j = 0; j < data.size(); ++j) {
            CHECK(strong_equiv(data[i], data[j]) == strong_equiv(data[j], data[i]));
            for (size_t k = 0; k < data.size(); ++k)
                if (strong_equiv(data[i], data[j]) && strong_equiv(data[j], data[k]))
                    CHECK(strong_equiv(data[i], data[k]));
        }
    }
}

TEST_CASE("points must be integral") {
    PAdic bad = PAdic::make(5, kPrec, 1) / PAdic::make(5, kPrec, 5);
    CHECK_THROWS_AS(OPoint({bad}), Error);
}
