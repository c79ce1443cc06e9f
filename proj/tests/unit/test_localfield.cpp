#include <doctest.h>

#include "tbl/localfield.hpp"

using namespace tbl;

namespace {

uint64_t mix(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

TEST_CASE("canonical decomposition of integers") {
    PAdic a = PAdic::make(7, 8, 343);
    CHECK(a.valuation() == 3);
    CHECK(a.unit() == 1);

    PAdic b = PAdic::make(5, 4, 50);
    CHECK(b.valuation() == 2);
    CHECK(b.unit() == 2);

    PAdic z = PAdic::make(7, 8, 0);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(z.valuation(), Error);
}

TEST_CASE("rationals with p-free denominators") {
    PAdic half = PAdic::make_rational(7, 4, 1, 2);
    CHECK(half.valuation() == 0);
    CHECK((half.unit() * 2) % mpz_class(7 * 7 * 7 * 7) == 1);

    CHECK_THROWS_AS(PAdic::make_rational(7, 4, 1, 14), Error);
    CHECK_THROWS_AS(PAdic::make_rational(7, 4, 1, 0), Error);
    CHECK_THROWS_AS(PAdic::make(6, 4, 1), Error);
    CHECK_THROWS_AS(PAdic::make(7, 0, 1), Error);
}

TEST_CASE("arithmetic examples") {
    PAdic seven = PAdic::make(7, 8, 7);
    PAdic prod = seven * seven;
    CHECK(prod.valuation() == 2);
    CHECK(prod.unit() == 1);

    PAdic fifty = PAdic::make(5, 6, 50);
    PAdic two = PAdic::make(5, 6, 2);
    PAdic quot = fifty / two;
    CHECK(quot.valuation() == 2);
    CHECK(quot.unit() == 1);

    CHECK_THROWS_AS(fifty / PAdic::zero(5, 6), Error);
}

TEST_CASE("subtraction tracks cancellation") {
    mpz_class big = 1 + 16807; // 1 + 7^5
    SUBCASE("enough digits to see the difference") {
        PAdic a = PAdic::make(7, 8, big);
        PAdic diff = a - PAdic::make(7, 8, 1);
        CHECK(diff.valuation() == 5);
        CHECK(diff.precision() == 3);
        CHECK(diff.unit() == 1);
    }
    SUBCASE("cancellation beyond the tracked digits") {
        PAdic a = PAdic::make(7, 4, big); // stored unit is 1 mod 7^4
        try {
            a - PAdic::make(7, 4, 1);
            FAIL("expected PrecisionExhausted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PrecisionExhausted);
        }
    }
}

TEST_CASE("valuation and unit residue examples") {
    CHECK(PAdic::make(7, 8, 7).valuation() == 1);
    CHECK(PAdic::make(7, 8, 3).valuation() == 0);
    CHECK(PAdic::make(7, 8, 343 * 5).valuation() == 3);

    CHECK(PAdic::make(7, 8, 50).unit_residue() == 1);
    CHECK(PAdic::make(7, 8, 7 * 8).unit_residue() == 1);
    CHECK(PAdic::make(7, 8, -7).unit_residue() == 6);
}

TEST_CASE("unit class comparison") {
    CHECK(unit_class_equal(PAdic::make(5, 8, 5), PAdic::make(5, 8, 30)));
    CHECK_FALSE(unit_class_equal(PAdic::make(5, 8, 5), PAdic::make(5, 8, 10)));
    CHECK(unit_class_equal(PAdic::make(5, 8, 3), PAdic::make(5, 8, 28)));
    CHECK_THROWS_AS(unit_class_equal(PAdic::zero(5, 8), PAdic::make(5, 8, 1)), Error);
}

TEST_CASE("multiplication matches exact rational arithmetic digit for digit") {
    uint64_t s = 1;
    for (long p : {3L, 7L}) {
        for (int iter = 0; iter < 200; ++iter) {
            long rn = static_cast<long>(mix(s) % 2000) - 1000;
            long rd = 1 + static_cast<long>(mix(s) % 50);
            long sn = static_cast<long>(mix(s) % 2000) - 1000;
            long sd = 1 + static_cast<long>(mix(s) % 50);
            if (rn == 0 || sn == 0 || rd % p == 0 || sd % p == 0) continue;
            PAdic a = PAdic::make_rational(p, 16, rn, rd);
            PAdic b = PAdic::make_rational(p, 16, sn, sd);
            PAdic direct = PAdic::make_rational(p, 16, mpz_class(rn) * sn, mpz_class(rd) * sd);
            CHECK((a * b).identical_to(direct));
        }
    }
}

TEST_CASE("valuation is additive and residues multiply") {
    uint64_t s = 99;
    long p = 5;
    for (int iter = 0; iter < 300; ++iter) {
        long x = static_cast<long>(mix(s) % 100000) - 50000;
        long y = static_cast<long>(mix(s) % 100000) - 50000;
        if (x == 0 || y == 0) continue;
        PAdic a = PAdic::make(p, 20, x);
        PAdic b = PAdic::make(p, 20, y);
        PAdic ab = a * b;
        CHECK(ab.valuation() == a.valuation() + b.valuation());
        CHECK(ab.unit_residue() == (a.unit_residue() * b.unit_residue()) % p);
    }
}

TEST_CASE("addition across valuations keeps every determined digit") {
    // 1 (32 digits) + 5^5 * 2 (4 digits): determined mod 5^9
    PAdic a = PAdic::make(5, 32, 1);
    PAdic b = PAdic::make(5, 4, 2 * 3125);
    PAdic sum = a + b;
    CHECK(sum.valuation() == 0);
    CHECK(sum.precision() == 9);

    // exact zero is the identity and costs nothing
    CHECK((a + PAdic::zero(5, 4)).identical_to(a));
    CHECK((PAdic::zero(5, 4) + b).identical_to(b));
}

TEST_CASE("negative powers") {
    PAdic u = PAdic::make(7, 10, 21); // 3 * 7
    PAdic inv = u.pow(-1);
    CHECK(inv.valuation() == -1);
    PAdic one = u * inv;
    CHECK(one.valuation() == 0);
    CHECK(one.unit() == 1);
}
