#include "hquad/discriminant.hpp"
#include "hquad/error.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace hquad;

namespace {

errc code_of(auto &&f) {
    try {
        f();
    } catch (const error &e) {
        return e.code();
    }
    FAIL("expected hquad::error");
    return errc::internal_consistency;
}

} // namespace

TEST_SUITE("discriminant") {

TEST_CASE("from_generator") {
    auto d7 = discriminant::from_generator(-7);
    CHECK(d7.value() == -7);
    CHECK(d7.kind() == disc_case::odd);
    CHECK(d7.modulus() == 7);

    auto d40 = discriminant::from_generator(-10);
    CHECK(d40.value() == -40);
    CHECK(d40.kind() == disc_case::d3);
    CHECK(d40.jacobi_modulus() == 5);

    CHECK(discriminant::from_generator(-5).kind() == disc_case::d1);
    CHECK(discriminant::from_generator(-14).kind() == disc_case::d2);

    CHECK(code_of([] { discriminant::from_generator(-1); }) == errc::excluded_discriminant);
    CHECK(code_of([] { discriminant::from_generator(-3); }) == errc::excluded_discriminant);
    CHECK(code_of([] { discriminant::from_generator(-12); }) == errc::invalid_generator);
    CHECK(code_of([] { discriminant::from_generator(5); }) == errc::invalid_generator);
}

TEST_CASE("from_discriminant") {
    auto d15 = discriminant::from_discriminant(-15);
    CHECK(d15.kind() == disc_case::odd);
    auto d56 = discriminant::from_discriminant(-56);
    CHECK(d56.kind() == disc_case::d2);
    CHECK(d56.generator() == -14);
    CHECK(d56.jacobi_modulus() == 7);

    CHECK(code_of([] { discriminant::from_discriminant(-12); }) == errc::not_fundamental);
    CHECK(code_of([] { discriminant::from_discriminant(-16); }) == errc::not_fundamental);
    CHECK(code_of([] { discriminant::from_discriminant(-9); }) == errc::not_fundamental);
    CHECK(code_of([] { discriminant::from_discriminant(-6); }) == errc::not_fundamental);
    CHECK(code_of([] { discriminant::from_discriminant(-4); }) == errc::excluded_discriminant);
    CHECK(code_of([] { discriminant::from_discriminant(-3); }) == errc::excluded_discriminant);
    CHECK(code_of([] { discriminant::from_discriminant(5); }) == errc::not_fundamental);
}

TEST_CASE("validator accepts exactly the fundamental discriminants") {
    for (integer d = -5; d >= -10000; --d) {
        bool accepted = true;
        try {
            auto disc = discriminant::from_discriminant(d);
            CHECK(disc.modulus() == -d);
            // generator and factory agree
            CHECK(discriminant::from_generator(disc.generator()) == disc);
        } catch (const error &) {
            accepted = false;
        }
        REQUIRE(accepted == oracle::fundamental(d));
    }
}

TEST_CASE("case tags follow m and n") {
    for (integer d = -5; d >= -3000; --d) {
        if (!oracle::fundamental(d))
            continue;
        auto disc = discriminant::from_discriminant(d);
        integer m = disc.generator();
        switch (disc.kind()) {
        case disc_case::odd:
            CHECK(d == m);
            CHECK(((m % 4) + 4) % 4 == 1);
            break;
        case disc_case::d1:
            CHECK(d == 4 * m);
            CHECK(((m % 4) + 4) % 4 == 3);
            break;
        case disc_case::d2:
            CHECK(d == 4 * m);
            CHECK(m % 2 == 0);
            CHECK((((m / 2) % 4) + 4) % 4 == 1);
            break;
        case disc_case::d3:
            CHECK(d == 4 * m);
            CHECK(m % 2 == 0);
            CHECK((((m / 2) % 4) + 4) % 4 == 3);
            break;
        }
    }
}

TEST_CASE("chi4 and chi8") {
    CHECK(chi4(1) == 1);
    CHECK(chi4(3) == -1);
    CHECK(chi4(7) == -1);
    CHECK(chi4(-1) == -1);
    CHECK(chi8(7) == 1);
    CHECK(chi8(3) == -1);
    CHECK(chi8(5) == -1);
    CHECK(chi8(1) == 1);
    CHECK(code_of([] { chi4(2); }) == errc::invalid_argument);
    CHECK(code_of([] { chi8(0); }) == errc::invalid_argument);
}

TEST_CASE("shift rules for chi4 and chi8") {
    for (integer x = -41; x <= 41; x += 2) {
        for (integer u = -16; u <= 16; u += 2) {
            if (((u % 4) + 4) % 4 == 0)
                CHECK(chi4(x + u) == chi4(x));
            else
                CHECK(chi4(x + u) == -chi4(x));
            if (((u % 8) + 8) % 8 == 0)
                CHECK(chi8(x + u) == chi8(x));
            if (((u % 8) + 8) % 8 == 4)
                CHECK(chi8(x + u) == -chi8(x));
        }
    }
}

TEST_CASE("chi examples") {
    auto d7 = discriminant::from_discriminant(-7);
    std::vector<int> row;
    for (integer x = 1; x <= 6; ++x)
        row.push_back(chi(d7, x));
    CHECK(row == std::vector<int>{1, 1, -1, 1, -1, -1});

    auto d40 = discriminant::from_discriminant(-40);
    CHECK(chi(d40, 3) == -1);
    CHECK(chi(d40, 5) == 0);
    CHECK(chi(discriminant::from_discriminant(-56), 11) == -1);
    CHECK(chi(discriminant::from_discriminant(-15), 2) == 1);
    CHECK(chi(discriminant::from_discriminant(-15), 14) == -1);
    // reduction of arbitrary integers
    CHECK(chi(d7, -1) == -1);
    CHECK(chi(d7, 10) == chi(d7, 3));
    CHECK(chi(d7, 0) == 0);
}

TEST_CASE("chi is the Kronecker symbol and the table matches the formula") {
    for (integer d : oracle::fundamentals(-1500, -5)) {
        auto disc = discriminant::from_discriminant(d);
        quad_char q(disc);
        for (integer x = 1; x <= disc.modulus(); ++x) {
            int v = chi(disc, x);
            REQUIRE(v == oracle::kronecker(d, x));
            CHECK(q(x) == v);
            CHECK(q(x - disc.modulus()) == v);
        }
    }
}

TEST_CASE("chi(3) follows D mod 3 for even D") {
    for (integer d : oracle::fundamentals(-5000, -5)) {
        if (d % 2 != 0 || d % 3 == 0)
            continue;
        auto disc = discriminant::from_discriminant(d);
        int expected = ((d % 3) + 3) % 3 == 1 ? 1 : -1;
        CHECK(chi(disc, 3) == expected);
    }
}

TEST_CASE("units are exactly X") {
    quad_char q(discriminant::from_discriminant(-40));
    CHECK(q.units() == std::vector<integer>{1, 3, 7, 9, 11, 13, 17, 19, 21, 23, 27, 29, 31, 33, 37, 39});
}

} // TEST_SUITE
