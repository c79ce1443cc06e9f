#include <doctest.h>

#include <numeric>
#include <vector>

#include "tbl/finitefield.hpp"

using namespace tbl;

namespace {

// order by brute force
uint64_t naive_order(const FqFieldPtr& field, const FqElem& t) {
    FqElem acc = t;
    uint64_t k = 1;
    while (acc != field->one()) {
        acc = acc * t;
        ++k;
    }
    return k;
}

} // namespace

TEST_CASE("cyclotomic extension degrees") {
    CHECK(FqField::cyclotomic(5, 3)->degree() == 2);
    CHECK(FqField::cyclotomic(7, 2)->degree() == 1);
    CHECK(FqField::cyclotomic(7, 3)->degree() == 1);
    CHECK(FqField::cyclotomic(3, 5)->degree() == 4);
    CHECK_THROWS_AS(FqField::cyclotomic(7, 14), Error);
}

TEST_CASE("modulus is the lex-smallest monic irreducible") {
    // over F_5 the degree-2 candidates ordered by (c0, c1) start x^2, x^2+x,
    // ..., x^2+1, x^2+x+1; the first irreducible is x^2+x+1
    FqFieldPtr f25 = FqField::make(5, 2);
    CHECK(f25->modulus() == std::vector<uint64_t>{1, 1, 1});
    FqFieldPtr f9 = FqField::make(3, 2);
    CHECK(f9->modulus() == std::vector<uint64_t>{1, 0, 1}); // x^2 + 1 mod 3
}

TEST_CASE("field axioms on random samples") {
    for (auto [p, f] : {std::pair<long, int>{7, 2}, {3, 3}, {2, 4}}) {
        FqFieldPtr field = FqField::make(p, f);
        uint64_t q = field->q();
        uint64_t s = 12345;
        for (int iter = 0; iter < 150; ++iter) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            FqElem a = field->element(s % q);
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            FqElem b = field->element(s % q);
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            FqElem c = field->element(s % q);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == field->one());
            }
        }
    }
}

TEST_CASE("Frobenius is an automorphism fixing exactly F_p") {
    FqFieldPtr field = FqField::make(5, 2);
    for (uint64_t i = 0; i < field->q(); ++i) {
        FqElem a = field->element(i);
        for (uint64_t j = 0; j < field->q(); ++j) {
            FqElem b = field->element(j);
            CHECK((a + b).pow(5) == a.pow(5) + b.pow(5));
        }
        bool fixed = a.pow(5) == a;
        bool prime_field = a.index() < 5;
        CHECK(fixed == prime_field);
    }
}

TEST_CASE("primitive roots are the smallest of exact order n") {
    FqFieldPtr f7 = FqField::make(7, 1);
    CHECK(primitive_nth_root(f7, 2) == f7->from_int(6));

    SUBCASE("order-3 element in F_7, checked exhaustively") {
        FqElem z = primitive_nth_root(f7, 3);
        CHECK(naive_order(f7, z) == 3);
        // exhaustive: no element of exact order 3 has a smaller index
        for (uint64_t i = 1; i < z.index(); ++i)
            CHECK(naive_order(f7, f7->element(i)) != 3);
    }

    SUBCASE("order-3 element in F_25, checked exhaustively") {
        FqFieldPtr f25 = FqField::make(5, 2);
        FqElem z = primitive_nth_root(f25, 3);
        CHECK(naive_order(f25, z) == 3);
        for (uint64_t i = 1; i < z.index(); ++i)
            CHECK(naive_order(f25, f25->element(i)) != 3);
    }

    CHECK_THROWS_AS(primitive_nth_root(f7, 4), Error); // 4 does not divide 6
}

TEST_CASE("discrete log in mu_n round trips") {
    FqFieldPtr field = FqField::make(10007, 1);
    long n = 5003; // (q-1)/2
    FqElem zeta = primitive_nth_root(field, n);
    CHECK(dlog_mu_n(field->one(), zeta, n) == 0);
    CHECK(dlog_mu_n(zeta, zeta, n) == 1);
    for (long k : {2L, 17L, 4999L, 2501L, 5002L}) {
        FqElem t = zeta.pow(static_cast<uint64_t>(k));
        CHECK(dlog_mu_n(t, zeta, n) == k);
    }
    CHECK_THROWS_AS(dlog_mu_n(field->from_int(3), zeta, 2), Error); // not in mu_2
}

TEST_CASE("Kummer class examples mod 7") {
    FqFieldPtr f7 = FqField::make(7, 1);
    CHECK(kummer_class_index(f7->from_int(3), 2) == 1); // 3 is a nonsquare mod 7
    CHECK(kummer_class_index(f7->from_int(2), 2) == 0); // 2 = 3^2 mod 7
    CHECK_THROWS_AS(kummer_class_index(f7->zero(), 2), Error);
}

TEST_CASE("Kummer index is a homomorphism with kernel the n-th powers") {
    for (auto [p, f] :
         {std::pair<long, int>{7, 1}, {11, 1}, {3, 2}, {5, 2}, {7, 2}, {11, 2}, {2, 3}}) {
        FqFieldPtr field = FqField::make(p, f);
        uint64_t q = field->q();
        if (q > 121) continue;
        for (long n = 2; n <= 8; ++n) {
            if ((q - 1) % static_cast<uint64_t>(n) != 0) continue;
            // kernel is exactly the n-th powers
            for (uint64_t i = 1; i < q; ++i) {
                FqElem t = field->element(i);
                bool is_power = false;
                for (uint64_t j = 1; j < q && !is_power; ++j)
                    if (field->element(j).pow(static_cast<uint64_t>(n)) == t) is_power = true;
                CHECK((kummer_class_index(t, n) == 0) == is_power);
            }
            // homomorphism on a full product table
            for (uint64_t i = 1; i < q; ++i)
                for (uint64_t j = i; j < q; j += 3) {
                    FqElem a = field->element(i), b = field->element(j);
                    CHECK(kummer_class_index(a * b, n) ==
                          (kummer_class_index(a, n) + kummer_class_index(b, n)) % n);
                }
        }
    }
}

TEST_CASE("norm to the prime field") {
    FqFieldPtr f25 = FqField::make(5, 2);
    // elements of F_p have norm t^f
    for (long t = 1; t < 5; ++t)
        CHECK(norm_to_prime_field(f25->from_int(t)) == (t * t) % 5);
    CHECK(norm_to_prime_field(f25->one()) == 1);

    SUBCASE("matches the product of explicit Frobenius conjugates") {
        for (uint64_t i = 1; i < f25->q(); ++i) {
            FqElem t = f25->element(i);
            FqElem prod = t * t.pow(5);
            CHECK(prod == f25->from_int(norm_to_prime_field(t)));
        }
    }

    SUBCASE("multiplicative and surjective onto F_p^*") {
        for (auto [p, f] : {std::pair<long, int>{5, 2}, {7, 2}}) {
            FqFieldPtr field = FqField::make(p, f);
            std::vector<bool> hit(p, false);
            for (uint64_t i = 1; i < field->q(); ++i) {
                FqElem a = field->element(i);
                hit[norm_to_prime_field(a)] = true;
                FqElem b = field->element(1 + (i * 7) % (field->q() - 1));
                long na = norm_to_prime_field(a);
                long nb = norm_to_prime_field(b);
                CHECK(norm_to_prime_field(a * b) == (na * nb) % p);
            }
            for (long t = 1; t < p; ++t) CHECK(hit[t]);
        }
    }
}
