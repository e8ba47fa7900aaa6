#include "hquad/expansion.hpp"

#include "hquad/discriminant.hpp"
#include "hquad/error.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace hquad {

namespace {

void require_base(integer base, integer n) {
    if (n <= 1)
        throw error(errc::invalid_modulus, "modulus must exceed 1, got " + std::to_string(n));
    if (base < 2)
        throw error(errc::invalid_argument, "base must be at least 2, got " + std::to_string(base));
    if (gcd(base, n) != 1)
        throw error(errc::not_coprime, "base " + std::to_string(base) + " shares a factor with " +
                                           std::to_string(n));
}

void require_unit(integer x, integer n) {
    if (x < 1 || x > n || gcd(x, n) != 1)
        throw error(errc::not_coprime, "numerator " + std::to_string(x) + " is not a unit in [1, " +
                                           std::to_string(n) + "]");
}

} // namespace

lda_result lda_step(integer x, integer base, integer n) {
    require_base(base, n);
    require_unit(x, n);
    integer bx = checked_mul(base, x);
    return {bx / n, bx % n};
}

expansion_period expand(integer x, integer base, integer n) {
    require_base(base, n);
    require_unit(x, n);
    integer e = multiplicative_order(base, n);
    expansion_period p{x, base, n, {}, {}};
    p.digits.reserve(static_cast<std::size_t>(e));
    p.cycle.reserve(static_cast<std::size_t>(e));
    integer cur = x;
    for (integer i = 0; i < e; ++i) {
        p.cycle.push_back(cur);
        auto [digit, next] = lda_step(cur, base, n);
        p.digits.push_back(digit);
        cur = next;
    }
    if (cur != x)
        throw error(errc::internal_consistency, "long division did not return to " +
                                                    std::to_string(x) + " after " +
                                                    std::to_string(e) + " steps");
    return p;
}

expansion_period expand_until_repeat(integer x, integer base, integer n) {
    require_base(base, n);
    require_unit(x, n);
    expansion_period p{x, base, n, {}, {}};
    integer cur = x;
    do {
        p.cycle.push_back(cur);
        auto [digit, next] = lda_step(cur, base, n);
        p.digits.push_back(digit);
        cur = next;
    } while (cur != x);
    return p;
}

integer digit_closed_form(integer x1, integer i, integer base, integer n) {
    require_base(base, n);
    require_unit(x1, n);
    if (i < 1)
        throw error(errc::invalid_argument, "digit index starts at 1");
    integer prev = residue_rep(checked_mul(mod_pow(base, i - 1, n), x1), n).value;
    integer cur = residue_rep(checked_mul(mod_pow(base, i, n), x1), n).value;
    integer numer = checked_sub(checked_mul(base, prev), cur);
    if (numer % n != 0)
        throw error(errc::internal_consistency, "digit numerator not divisible by modulus");
    return numer / n;
}

cycle_set all_cycles(integer base, integer n) {
    require_base(base, n);
    cycle_set out{base, n, {}};
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (integer x = 1; x < n; ++x) {
        if (seen[static_cast<std::size_t>(x)] || gcd(x, n) != 1)
            continue;
        cycle c;
        integer cur = x;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            c.push_back(cur);
            cur = static_cast<integer>((static_cast<wide_integer>(base) * cur) % n);
        } while (cur != x);
        out.cycles.push_back(std::move(c));
    }
    return out;
}

cycle normalize_cycle(std::span<const integer> c, const quad_char &chi) {
    if (c.empty())
        throw error(errc::invalid_argument, "empty cycle");
    int chi_base = chi(c[0]) * chi(c[1 % c.size()]);
    if (chi_base != -1)
        throw error(errc::normalization_undefined,
                    "normalization needs chi(B) = -1 for the cycle's base");
    std::size_t start = c.size();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (chi(c[i]) == 1 && (start == c.size() || c[i] < c[start]))
            start = i;
    }
    cycle out(c.begin(), c.end());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
    return out;
}

std::string format_expansion(const expansion_period &p) {
    std::ostringstream os;
    os << "0.(";
    for (std::size_t i = 0; i < p.digits.size(); ++i)
        os << (i ? " " : "") << p.digits[i];
    os << ")_" << p.base;
    return os.str();
}

} // namespace hquad
