#include <random>
#include <stdexcept>

#include "doctest.h"
#include "exthom/bignum.hpp"

using namespace exthom;

TEST_SUITE("bignum") {

TEST_CASE("power and combinatorial helpers") {
    CHECK(big_pow(2, 10) == 1024);
    CHECK(big_pow(0, 0) == 1);
    CHECK(big_pow(7, 0) == 1);
    CHECK(big_pow(2, 64) == BigCount("18446744073709551616"));
    CHECK(pow2(5) == 32);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigCount("2432902008176640000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(60, 30) == BigCount("118264581564861424"));
    CHECK(binomial(4, 7) == 0);
    CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rat_pow(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(rat_pow(Rational(5), 0) == 1);
}

TEST_CASE("rational string round trips") {
    // mpq_class(n, d) does not reduce; the serialization contract assumes
    // canonical values, so build them the way the library does.
    auto canon = [](long n, long d) {
        Rational q(n, d);
        q.canonicalize();
        return q;
    };
    CHECK(rational_to_string(canon(3, 7)) == "3/7");
    CHECK(rational_to_string(canon(4, 2)) == "2");
    CHECK(rational_to_string(canon(-3, 7)) == "-3/7");
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(rational_from_string("22/7") == canon(22, 7));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK(rational_from_string("6/4") == canon(3, 2));  // canonicalized
    CHECK_THROWS_AS((void)rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)rational_from_string(""), std::invalid_argument);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 60);
    for (int i = 0; i < 200; ++i) {
        Rational q = canon(num(rng), den(rng));
        CHECK(rational_from_string(rational_to_string(q)) == q);
    }
}

TEST_CASE("compare_normalized agrees with the defining cross power") {
    // a^{1/va} vs b^{1/vb} has the sign of a^vb - b^va for positive bases.
    CHECK(compare_normalized(BigCount(8), 3, BigCount(4), 2) == 0);    // both = 2
    CHECK(compare_normalized(BigCount(9), 2, BigCount(2), 1) > 0);     // 3 > 2
    CHECK(compare_normalized(BigCount(2), 1, BigCount(9), 2) < 0);
    CHECK(compare_normalized(BigCount(11), 5, BigCount(7), 4) < 0);    // 11^4 < 7^5
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> base(1, 50);
    std::uniform_int_distribution<unsigned> expo(1, 6);
    for (int i = 0; i < 300; ++i) {
        BigCount a = base(rng), b = base(rng);
        unsigned va = expo(rng), vb = expo(rng);
        int got = compare_normalized(a, va, b, vb);
        BigCount lhs = big_pow(a, vb), rhs = big_pow(b, va);
        int want = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        CHECK(got == want);
        CHECK(compare_normalized(b, vb, a, va) == -want);       // antisymmetry
        CHECK(compare_normalized(a, va, a, va) == 0);
        CHECK(compare_normalized(big_pow(a, 3), 3 * va, a, va) == 0);  // scaling
    }
}

TEST_CASE("compare_normalized zero and error handling") {
    CHECK(compare_normalized(BigCount(0), 3, BigCount(5), 2) < 0);
    CHECK(compare_normalized(BigCount(5), 2, BigCount(0), 3) > 0);
    CHECK(compare_normalized(BigCount(0), 1, BigCount(0), 5) == 0);
    CHECK_THROWS_AS((void)compare_normalized(BigCount(-1), 2, BigCount(3), 1),
                    std::domain_error);
    CHECK_THROWS_AS((void)compare_normalized(BigCount(3), 1, BigCount(-2), 2),
                    std::domain_error);
}

TEST_CASE("compare_normalized on rationals") {
    CHECK(compare_normalized(Rational(1, 8), 3, Rational(1, 4), 2) == 0);  // both 1/2
    CHECK(compare_normalized(Rational(9, 4), 2, Rational(3, 2), 1) == 0);
    CHECK(compare_normalized(Rational(2), 1, Rational(9, 2), 2) < 0);      // 2 < 2.121
    CHECK(compare_normalized(Rational(0), 2, Rational(1, 9), 5) < 0);
    CHECK_THROWS_AS((void)compare_normalized(Rational(-1, 2), 1, Rational(1), 1),
                    std::domain_error);
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> part(1, 40);
    std::uniform_int_distribution<unsigned> expo(1, 5);
    for (int i = 0; i < 200; ++i) {
        Rational a(part(rng), part(rng)), b(part(rng), part(rng));
        unsigned va = expo(rng), vb = expo(rng);
        int got = compare_normalized(a, va, b, vb);
        Rational lhs = rat_pow(a, vb), rhs = rat_pow(b, va);
        int want = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
        CHECK(got == want);
    }
}

} // TEST_SUITE
