#include "hquad/discriminant.hpp"
#include "hquad/error.hpp"
#include "hquad/expansion.hpp"

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

using seq = std::vector<integer>;

} // namespace

TEST_SUITE("expansion") {

TEST_CASE("lda_step") {
    CHECK(lda_step(1, 7, 15) == lda_result{0, 7});
    CHECK(lda_step(7, 7, 15) == lda_result{3, 4});
    CHECK(lda_step(13, 7, 15) == lda_result{6, 1});
    for (integer b = 2; b <= 20; ++b)
        CHECK(lda_step(1, b, b + 1) == lda_result{0, b});
    CHECK(code_of([] { lda_step(3, 7, 15); }) == errc::not_coprime);
    CHECK(code_of([] { lda_step(1, 5, 15); }) == errc::not_coprime);
    CHECK(code_of([] { lda_step(15, 7, 15); }) == errc::not_coprime);
}

TEST_CASE("expand") {
    auto a = expand(1, 7, 15);
    CHECK(a.digits == seq{0, 3, 1, 6});
    CHECK(a.cycle == seq{1, 7, 4, 13});
    auto b = expand(14, 7, 15);
    CHECK(b.digits == seq{6, 3, 5, 0});
    CHECK(b.cycle == seq{14, 8, 11, 2});
    CHECK(expand(1, 10, 7).digits == seq{1, 4, 2, 8, 5, 7});
    CHECK(expand(11, 4, 15).digits == seq{2, 3});
    CHECK(expand(7, 4, 15).digits == seq{1, 3});
    CHECK(expand(2, 7, 15).digits == seq{0, 6, 3, 5});
    CHECK(format_expansion(a) == "0.(0 3 1 6)_7");
    CHECK(format_expansion(expand(1, 16, 17)) == "0.(0 15)_16");
}

TEST_CASE("expand agrees with recurrence detection and schoolbook division") {
    for (integer n : {15, 39, 40, 43, 56, 97, 120, 143}) {
        for (integer b = 2; b <= 13; ++b) {
            if (gcd(b, n) != 1)
                continue;
            for (integer x = 1; x < n; ++x) {
                if (gcd(x, n) != 1)
                    continue;
                auto p = expand(x, b, n);
                auto q = expand_until_repeat(x, b, n);
                CHECK(p.digits == q.digits);
                CHECK(p.cycle == q.cycle);
                CHECK(p.digits == oracle::long_division(x, b, n, static_cast<integer>(p.period())));
            }
        }
    }
}

TEST_CASE("digit_closed_form") {
    CHECK(digit_closed_form(1, 2, 7, 15) == 3);
    CHECK(digit_closed_form(1, 1, 10, 7) == 1);
    for (integer n : {7, 15, 40}) {
        for (integer i = 1; i <= 12; ++i)
            CHECK(digit_closed_form(1, i, n + 1, n) == 1);
    }
    CHECK(code_of([] { digit_closed_form(1, 0, 7, 15); }) == errc::invalid_argument);
}

TEST_CASE("all_cycles") {
    auto c7 = all_cycles(7, 15);
    REQUIRE(c7.count() == 2);
    CHECK(c7.cycles[0] == seq{1, 7, 4, 13});
    CHECK(c7.cycles[1] == seq{2, 14, 8, 11});

    auto c4 = all_cycles(4, 15);
    REQUIRE(c4.count() == 4);
    CHECK(c4.cycles[0] == seq{1, 4});
    CHECK(c4.cycles[1] == seq{2, 8});
    CHECK(c4.cycles[2] == seq{7, 13});
    CHECK(c4.cycles[3] == seq{11, 14});

    auto c10 = all_cycles(10, 7);
    REQUIRE(c10.count() == 1);
    CHECK(c10.period() == 6);

    CHECK(code_of([] { all_cycles(3, 15); }) == errc::not_coprime);
}

TEST_CASE("normalize_cycle") {
    quad_char chi(discriminant::from_discriminant(-15));
    CHECK(normalize_cycle(seq{14, 8, 11, 2}, chi) == seq{2, 14, 8, 11});
    CHECK(normalize_cycle(seq{1, 7, 4, 13}, chi) == seq{1, 7, 4, 13});
    CHECK(normalize_cycle(seq{8, 11, 2, 14}, chi) == seq{2, 14, 8, 11});
    CHECK(code_of([&] { normalize_cycle(seq{1, 4}, chi); }) == errc::normalization_undefined);
    CHECK(code_of([&] { normalize_cycle(seq{1}, chi); }) == errc::normalization_undefined);
}

TEST_CASE("normalized cycles start at chi = +1 for every cycle of every base") {
    for (integer d : {-15, -23, -40, -56, -143}) {
        quad_char chi(discriminant::from_discriminant(d));
        for (integer b = 2; b <= 13; ++b) {
            if (gcd(b, chi.modulus()) != 1 || chi(b) != -1)
                continue;
            for (const auto &c : all_cycles(b, chi.modulus()).cycles) {
                auto nc = normalize_cycle(c, chi);
                CHECK(chi(nc.front()) == 1);
                // still the orbit of x -> Bx, just rotated
                CHECK(expand(nc.front(), b, chi.modulus()).cycle == nc);
            }
        }
    }
}

} // TEST_SUITE
