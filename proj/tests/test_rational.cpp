#include <doctest.h>

#include <random>
#include <sstream>

#include "gptd/rational.hpp"

using gptd::Rat;

TEST_CASE("construction canonicalizes") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(-1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));   // sign moves to the numerator
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).denominator() == 1);
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse and format round-trip") {
    CHECK(Rat::parse("14/27").str() == "14/27");
    CHECK(Rat::parse("-1/27").str() == "-1/27");
    CHECK(Rat::parse("4/6").str() == "2/3");
    CHECK(Rat::parse("-0").str() == "0");
    CHECK(Rat::parse("5").str() == "5");
    CHECK(Rat::parse("5/1").str() == "5");

    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("/2"), std::invalid_argument);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(-Rat(5, 7) == Rat(-5, 7));
    CHECK(Rat(-5, 7).abs() == Rat(5, 7));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("ordering is exact") {
    CHECK(Rat(1, 3) < Rat(34, 100));  // 0.333... < 0.34
    CHECK(Rat(1, 3) > Rat(33, 100));
    CHECK(Rat(-1, 27) < Rat(0));
    CHECK(Rat(0) <= Rat(0));
    CHECK(Rat(1000000000L, 3) > Rat(999999999L, 3));
}

TEST_CASE("random arithmetic agrees with integer-level evaluation") {
    // Cross-check a/b + c/d against the textbook formula evaluated with
    // raw big integers and a manual gcd reduction.
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    for (int i = 0; i < 500; ++i) {
        const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const Rat sum = Rat(a, b) + Rat(c, d);
        mpz_class top = mpz_class(a) * d + mpz_class(c) * b;
        mpz_class bottom = mpz_class(b) * d;
        mpz_class g = gcd(top, bottom);
        if (g != 0) {
            top /= g;
            bottom /= g;
        }
        if (bottom < 0) {
            top = -top;
            bottom = -bottom;
        }
        CHECK(sum.numerator() == top);
        CHECK(sum.denominator() == bottom);

        const Rat prod = Rat(a, b) * Rat(c, d);
        CHECK(prod == Rat(mpq_class(mpz_class(a) * c, mpz_class(b) * d)));
    }
}

TEST_CASE("stream output matches str") {
    std::ostringstream os;
    os << Rat(-3, 9);
    CHECK(os.str() == "-1/3");
}
