#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "siegel/detail/random.hpp"
#include "siegel/rational.hpp"

using namespace siegel;

TEST_CASE("construction keeps canonical form") {
    Rational q(BigInt(6), BigInt(-9));
    CHECK(q.numerator() == -2);
    CHECK(q.denominator() == 3);

    CHECK(Rational(BigInt(0), BigInt(7)).sign() == 0);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("reduce round-trip: (a/b) * b == a") {
    std::mt19937_64 gen(12345);
    for (int i = 0; i < 10000; ++i) {
        long a = static_cast<long>(gen() % 2000001) - 1000000;
        long b = static_cast<long>(gen() % 1000000) + 1;
        Rational q{BigInt(a), BigInt(b)};
        BigInt g;
        mpz_gcd(g.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
        if (q.sign() == 0) CHECK(q.denominator() == 1);
        else CHECK(g == 1);
        CHECK(q.denominator() > 0);
        Rational back = q * Rational(BigInt(b));
        CHECK(back == Rational(BigInt(a)));
    }
}

TEST_CASE("arithmetic is exact") {
    Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(115, 192) * Rational(192, 115) == Rational(1));
    CHECK(Rational(2, 3) - Rational(3, 4) == Rational(-1, 12));
    CHECK(Rational(5, 7).inverse() == Rational(7, 5));
}

TEST_CASE("parse and print") {
    CHECK(Rational::parse("115/192").str() == "115/192");
    CHECK(Rational::parse("-3/7").str() == "-3/7");
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational::parse("10/2").str() == "5");
    CHECK(Rational(1, 1).str() == "1");
}

TEST_CASE("to_double rounds to nearest") {
    // against IEEE division, which is correctly rounded for exact operands
    std::mt19937_64 gen(99);
    for (int i = 0; i < 10000; ++i) {
        long long a = static_cast<long long>(gen() % (1ull << 50));
        long long b = static_cast<long long>(gen() % (1ull << 50)) + 1;
        if (gen() & 1) a = -a;
        Rational q{BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b))};
        double expected = static_cast<double>(a) / static_cast<double>(b);
        CHECK(q.to_double() == expected);
    }

    CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
    CHECK(Rational(115, 192).to_double() == 115.0 / 192.0);
    CHECK(Rational(-7, 11).to_double() == -7.0 / 11.0);

    // power-of-two scaling is exact
    Rational big = Rational(115, 192) * Rational(pow2(400));
    CHECK(big.to_double() == std::ldexp(115.0 / 192.0, 400));

    // tie halfway between 2^53 and 2^53 + 2 resolves to even
    Rational tie(pow2(53) + 1, BigInt(1));
    Rational half = tie * Rational(1, 2); // (2^53+1)/2, exactly halfway
    double d = half.to_double();
    CHECK(d == std::ldexp(1.0, 52)); // rounds down to the even mantissa

    // above-the-tie rounds up
    Rational above = half + Rational(1, 4);
    CHECK(above.to_double() == std::ldexp(1.0, 52) + 1.0);

    CHECK(Rational(0, 5).to_double() == 0.0);
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
}
