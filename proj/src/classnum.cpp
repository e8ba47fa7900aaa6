#include "hquad/classnum.hpp"

#include "hquad/error.hpp"

#include <string>

namespace hquad {

rational::rational(integer n, integer d) {
    if (d == 0)
        throw error(errc::invalid_argument, "zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    integer g = gcd(n, d);
    num = n / g;
    den = d / g;
}

rational operator+(const rational &a, const rational &b) {
    integer g = gcd(a.den, b.den);
    integer lhs = checked_mul(a.num, b.den / g);
    integer rhs = checked_mul(b.num, a.den / g);
    return rational(checked_add(lhs, rhs), checked_mul(a.den / g, b.den));
}

std::string_view to_string(method m) {
    switch (m) {
    case method::dirichlet: return "dirichlet";
    case method::cycle_digits: return "cycle-digits";
    case method::floor_sum: return "floor-sum";
    case method::interval_sum: return "interval-sum";
    case method::coarse_interval_sum: return "coarse-interval-sum";
    case method::quarter_sum: return "quarter-sum";
    case method::sixth_sum: return "sixth-sum";
    case method::girstmair: return "girstmair";
    }
    return "?";
}

namespace {

void require_base(const quad_char &chi, integer base) {
    if (base < 2)
        throw error(errc::invalid_argument, "base must be at least 2, got " + std::to_string(base));
    if (gcd(base, chi.modulus()) != 1)
        throw error(errc::not_coprime, "base " + std::to_string(base) + " is not prime to " +
                                           std::to_string(chi.modulus()));
}

// Divides raw by divisor, insisting on an exact positive quotient.
integer exact_class_number(integer raw, integer divisor, std::string_view what) {
    if (divisor <= 0 || raw % divisor != 0)
        throw error(errc::internal_consistency, std::string(what) + ": " + std::to_string(raw) +
                                                    " is not divisible by " +
                                                    std::to_string(divisor));
    integer h = raw / divisor;
    if (h < 1)
        throw error(errc::internal_consistency,
                    std::string(what) + ": non-positive class number " + std::to_string(h));
    return h;
}

} // namespace

h_result h_dirichlet(const quad_char &chi) {
    integer n = chi.modulus();
    integer sum = 0;
    for (integer x : chi.units())
        sum = checked_add(sum, chi(x) * x);
    integer h = exact_class_number(checked_sub(0, sum), n, "dirichlet sum");
    return {chi.disc(), h, method::dirichlet, 0, 0, sum};
}

rational h_cycle_contribution(std::span<const integer> c, const quad_char &chi) {
    integer sum = 0;
    for (integer x : c)
        sum = checked_add(sum, chi(x) * x);
    return rational(checked_sub(0, sum), chi.modulus());
}

h_result h_theorem1(const quad_char &chi, integer base) {
    require_base(chi, base);
    integer n = chi.modulus();
    int chi_base = chi(base);
    auto cycles = all_cycles(base, n);
    integer total = 0;
    if (chi_base == -1) {
        for (const auto &c : cycles.cycles) {
            auto normalized = normalize_cycle(c, chi);
            integer sign = -1; // (-1)^i, i starting at 1
            for (integer x : normalized) {
                total = checked_add(total, sign * (base * x / n));
                sign = -sign;
            }
        }
    } else {
        for (const auto &c : cycles.cycles) {
            integer digit_sum = 0;
            for (integer x : c)
                digit_sum = checked_add(digit_sum, base * x / n);
            total = checked_sub(total, chi(c.front()) * digit_sum);
        }
    }
    integer h = exact_class_number(total, base - chi_base, "cycle digit sum");
    return {chi.disc(), h, method::cycle_digits, base, 0, total};
}

h_result h_floor_formula(const quad_char &chi, integer base) {
    require_base(chi, base);
    integer n = chi.modulus();
    integer total = 0;
    for (integer x : chi.units())
        total = checked_sub(total, chi(x) * (checked_mul(base, x) / n));
    integer h = exact_class_number(total, base - chi(base), "floor sum");
    return {chi.disc(), h, method::floor_sum, base, 0, total};
}

std::pair<rational, rational> ek_table::interval(integer k) const {
    integer n = modulus();
    return {rational(checked_mul(k, n), base), rational(checked_mul(k + 1, n), base)};
}

integer ek_table::coarse(integer k, integer b2) const {
    integer sum = 0;
    for (integer j = 0; j < b2; ++j)
        sum += entries.at(static_cast<std::size_t>(k * b2 + j));
    return sum;
}

ek_table make_ek_table(const quad_char &chi, integer base) {
    require_base(chi, base);
    integer n = chi.modulus();
    auto size = static_cast<std::size_t>(base);
    ek_table t{chi.disc(), base, std::vector<integer>(size), std::vector<integer>(size),
               std::vector<integer>(size)};
    for (integer x : chi.units()) {
        integer bx = checked_mul(base, x);
        if (bx % n == 0)
            throw error(errc::internal_consistency,
                        "unit " + std::to_string(x) + " sits on an interval endpoint");
        auto k = static_cast<std::size_t>(bx / n);
        if (chi(x) == 1)
            ++t.plus[k];
        else
            ++t.minus[k];
    }
    for (std::size_t k = 0; k < size; ++k)
        t.entries[k] = t.plus[k] - t.minus[k];
    return t;
}

h_result h_from_ek(const ek_table &table, const quad_char &chi) {
    return h_from_ek_factored(table, chi, table.base);
}

h_result h_from_ek(const quad_char &chi, integer base) {
    return h_from_ek(make_ek_table(chi, base), chi);
}

h_result h_from_ek_factored(const ek_table &table, const quad_char &chi, integer b1) {
    integer base = table.base;
    if (b1 <= 1 || b1 > base || base % b1 != 0)
        throw error(errc::invalid_factorization,
                    std::to_string(b1) + " is not a divisor of " + std::to_string(base) +
                        " above 1");
    integer b2 = base / b1;
    integer total = 0;
    for (integer k = 0; k < b1 / 2; ++k)
        total = checked_add(total, (b1 - 1 - 2 * k) * table.coarse(k, b2));
    bool whole = b1 == base;
    integer h = exact_class_number(total, b1 - chi(b1), whole ? "interval sum" : "coarse interval sum");
    return {chi.disc(), h, whole ? method::interval_sum : method::coarse_interval_sum, base,
            whole ? 0 : b1, total};
}

h_result h_from_ek_factored(const quad_char &chi, integer base, integer b1) {
    return h_from_ek_factored(make_ek_table(chi, base), chi, b1);
}

namespace {

void require_unit(integer x, integer n) {
    if (n <= 1)
        throw error(errc::invalid_modulus, "modulus must exceed 1, got " + std::to_string(n));
    if (x < 1 || x > n || gcd(x, n) != 1)
        throw error(errc::invalid_argument,
                    std::to_string(x) + " is not in X for N = " + std::to_string(n));
}

void require_even_modulus(integer n) {
    if (n % 2 != 0)
        throw error(errc::undefined_for_odd_discriminant,
                    "N = " + std::to_string(n) + " is odd");
    if (n % 4 != 0)
        throw error(errc::invalid_argument, "N = " + std::to_string(n) + " is not 0 mod 4");
}

} // namespace

integer xi(integer x, integer n) {
    require_unit(x, n);
    return n - x;
}

integer eta(integer x, integer n) {
    require_even_modulus(n);
    require_unit(x, n);
    integer half = n / 2;
    return x < half ? x + half : x - half;
}

integer lambda_map(integer x, integer n) {
    require_even_modulus(n);
    require_unit(x, n);
    integer half = n / 2;
    return x < half ? half - x : 3 * half - x;
}

} // namespace hquad
