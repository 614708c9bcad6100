#include <doctest.h>

#include <random>

#include "picmod/errors.hpp"
#include "picmod/qz.hpp"

using namespace picmod;

TEST_CASE("canonical representatives") {
    CHECK(QZ(3, 2) == QZ(1, 2));
    CHECK(QZ(0, 7) == QZ());
    CHECK(QZ(0, 7).str() == "0/1");
    CHECK(QZ(-1, 4) == QZ(3, 4));
    CHECK(QZ(6, 4) == QZ(1, 2));
    CHECK(QZ(7, 7) == QZ());
    CHECK_THROWS_AS(QZ(1, 0), Error);
}

TEST_CASE("arithmetic in Q/Z") {
    CHECK(QZ(1, 2) + QZ(1, 2) == QZ());
    CHECK(QZ(1, 3) + QZ(1, 6) == QZ(1, 2));
    CHECK(-QZ(1, 4) == QZ(3, 4));
    CHECK(QZ(1, 4).times(3) == QZ(3, 4));
    CHECK(3 * QZ(1, 4) == QZ(3, 4));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-30, 30), den(1, 24);
    for (int it = 0; it < 500; ++it) {
        const QZ a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + QZ() == a);
        CHECK(a + (-a) == QZ());
        // den(s)-fold sums cancel
        CHECK(a.times(a.den()) == QZ());
        CHECK(a.order() == a.den());
    }
}

TEST_CASE("parse and print round-trip") {
    CHECK(QZ::parse("1/2") == QZ(1, 2));
    CHECK(QZ::parse("0/1") == QZ());
    CHECK(QZ::parse("3") == QZ());
    CHECK(QZ::parse("-1/4") == QZ(3, 4));
    CHECK_THROWS_AS(QZ::parse("x/y"), ParseError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 16);
    for (int it = 0; it < 200; ++it) {
        const QZ a(num(rng), den(rng));
        CHECK(QZ::parse(a.str()) == a);
    }
}

TEST_CASE("numeric ordering") {
    CHECK(QZ(1, 3) < QZ(1, 2));
    CHECK(QZ(2, 3) > QZ(1, 2));
    CHECK(QZ() < QZ(1, 7));
}
