#include "hquad/theorems.hpp"

#include "hquad/error.hpp"

#include <string>

namespace hquad {

std::string_view to_string(theorem t) {
    switch (t) {
    case theorem::b2: return "b2";
    case theorem::b4: return "b4";
    case theorem::b6: return "b6";
    case theorem::b12: return "b12";
    case theorem::s1_s2: return "s1_s2";
    }
    return "?";
}

namespace {

void require_odd(const discriminant &d) {
    if (!d.is_odd())
        throw error(errc::wrong_parity, "D = " + std::to_string(d.value()) + " is even");
}

void require_even(const discriminant &d) {
    if (d.is_odd())
        throw error(errc::wrong_parity, "D = " + std::to_string(d.value()) + " is odd");
}

void require_prime_to_three(const discriminant &d) {
    if (d.value() % 3 == 0)
        throw error(errc::divisible_by_three, "3 divides D = " + std::to_string(d.value()));
}

theorem_check make_check(const quad_char &chi, theorem id, std::vector<std::string> labels,
                         std::vector<integer> expected, std::vector<integer> observed) {
    bool pass = expected == observed;
    return {chi.disc(), id, std::move(labels), std::move(expected), std::move(observed), pass};
}

// Sum of chi(x) over units x with lo*x > N and hi*x < N, i.e. x in (N/lo, N/hi).
// lo = 0 means no lower bound.
integer open_interval_sum(const quad_char &chi, integer lo, integer hi) {
    integer n = chi.modulus();
    integer sum = 0;
    for (integer x : chi.units()) {
        if (hi * x >= n)
            break;
        if (lo != 0 && lo * x <= n)
            continue;
        sum += chi(x);
    }
    return sum;
}

} // namespace

congruence_class24 classify_mod24(const discriminant &d) {
    require_odd(d);
    require_prime_to_three(d);
    switch (d.modulus() % 24) {
    case 23: return {23, 1, 1};
    case 11: return {11, -1, 1};
    case 7: return {7, 1, -1};
    case 19: return {19, -1, -1};
    }
    throw error(errc::internal_consistency,
                "N = " + std::to_string(d.modulus()) + " has unexpected residue mod 24");
}

theorem_check check_b2(const quad_char &chi) {
    require_odd(chi.disc());
    integer h = h_dirichlet(chi).h;
    integer e0 = make_ek_table(chi, 2).entries[0];
    integer factor = chi.modulus() % 8 == 7 ? 1 : 3;
    auto check = make_check(chi, theorem::b2, {"E0(2)"}, {factor * h}, {e0});
    check.pass = check.pass && e0 > 0;
    return check;
}

theorem_check check_b4(const quad_char &chi) {
    require_odd(chi.disc());
    integer h = h_dirichlet(chi).h;
    auto t = make_ek_table(chi, 4);
    std::vector<integer> expected =
        chi.modulus() % 8 == 7 ? std::vector<integer>{h, 0} : std::vector<integer>{0, 3 * h};
    return make_check(chi, theorem::b4, {"E0(4)", "E1(4)"}, expected,
                      {t.entries[0], t.entries[1]});
}

theorem_check check_b6(const quad_char &chi) {
    auto cls = classify_mod24(chi.disc());
    integer h = h_dirichlet(chi).h;
    auto t = make_ek_table(chi, 6);
    std::vector<integer> expected;
    switch (cls.residue) {
    case 23: expected = {h, 0, 0}; break;
    case 11: expected = {h, 0, 2 * h}; break;
    case 7: expected = {h, h, -h}; break;
    case 19: expected = {-h, 3 * h, h}; break;
    }
    return make_check(chi, theorem::b6, {"E0(6)", "E1(6)", "E2(6)"}, expected,
                      {t.entries[0], t.entries[1], t.entries[2]});
}

h_result h_abs_sixth(const quad_char &chi) {
    require_odd(chi.disc());
    require_prime_to_three(chi.disc());
    integer s = open_interval_sum(chi, 0, 6);
    integer h = s < 0 ? -s : s;
    integer reference = h_dirichlet(chi).h;
    if (h != reference)
        throw error(errc::internal_consistency, "sixth sum gives " + std::to_string(h) +
                                                    ", Dirichlet sum gives " +
                                                    std::to_string(reference));
    return {chi.disc(), h, method::sixth_sum, 0, 0, s};
}

theorem_check check_b12(const quad_char &chi, integer h, integer e0) {
    auto cls = classify_mod24(chi.disc());
    auto t = make_ek_table(chi, 12);
    std::vector<integer> expected;
    switch (cls.residue) {
    case 23: expected = {h - e0, 0, 0, h - e0, -h + e0}; break;
    case 11: expected = {h - e0, -h, h, h - e0, h + e0}; break;
    case 7: expected = {h - e0, 0, h, -e0, -h + e0}; break;
    case 19: expected = {-h - e0, h, 2 * h, 2 * h - e0, -h + e0}; break;
    }
    std::vector<integer> observed(t.entries.begin() + 1, t.entries.begin() + 6);
    return make_check(chi, theorem::b12, {"E1(12)", "E2(12)", "E3(12)", "E4(12)", "E5(12)"},
                      expected, observed);
}

h_result h_quarter_sum(const quad_char &chi) {
    require_even(chi.disc());
    integer s = open_interval_sum(chi, 0, 4);
    integer reference = h_dirichlet(chi).h;
    if (s != reference)
        throw error(errc::internal_consistency, "quarter sum gives " + std::to_string(s) +
                                                    ", Dirichlet sum gives " +
                                                    std::to_string(reference));
    return {chi.disc(), s, method::quarter_sum, 0, 0, s};
}

theorem_check check_s1_s2(const quad_char &chi) {
    const auto &d = chi.disc();
    require_even(d);
    require_prime_to_three(d);
    integer h = h_dirichlet(chi).h;
    integer s1 = open_interval_sum(chi, 0, 6);
    integer s2 = open_interval_sum(chi, 6, 4);
    bool one_mod_three = mod_floor(d.value(), 3) == 1;
    std::vector<integer> expected = one_mod_three ? std::vector<integer>{h, 0, 1}
                                                  : std::vector<integer>{0, h, -1};
    return make_check(chi, theorem::s1_s2, {"S1", "S2", "chi(3)"}, expected,
                      {s1, s2, chi(3)});
}

} // namespace hquad
