#pragma once

#include "hquad/arith.hpp"

#include <span>
#include <string>
#include <vector>

namespace hquad {

class quad_char;

/// One step of long division: base*x = digit*n + next.
struct lda_result {
    integer digit;
    integer next;

    friend bool operator==(const lda_result &, const lda_result &) = default;
};

lda_result lda_step(integer x, integer base, integer n);

/*
 * Purely periodic base-B expansion of x1/N together with the orbit of
 * remainders it visits.  digits[i] and cycle[i] are a_{i+1} and x_{i+1}:
 *
 *     base * cycle[i] == digits[i] * modulus + cycle[(i + 1) % e]
 */
struct expansion_period {
    integer x1;
    integer base;
    integer modulus;
    std::vector<integer> digits;
    std::vector<integer> cycle;

    std::size_t period() const noexcept { return digits.size(); }
};

/// Runs exactly multiplicative_order(base, n) long-division steps.
expansion_period expand(integer x, integer base, integer n);

/// Same result, but stops at the first return to x instead of computing
/// the order up front.
expansion_period expand_until_repeat(integer x, integer base, integer n);

/// i-th digit (i >= 1) of x1/N from residues alone:
/// (B<B^{i-1} x1> - <B^i x1>) / N.
integer digit_closed_form(integer x1, integer i, integer base, integer n);

using cycle = std::vector<integer>;

/// The orbits of x -> <Bx> on X.
struct cycle_set {
    integer base;
    integer modulus;
    std::vector<cycle> cycles;

    std::size_t count() const noexcept { return cycles.size(); }
    std::size_t period() const noexcept { return cycles.empty() ? 0 : cycles.front().size(); }
};

/// Cycles ordered by smallest element, each starting at its smallest element.
cycle_set all_cycles(integer base, integer n);

/// Rotates a cycle whose base has chi(B) = -1 so that it starts at the
/// smallest element with chi = +1. chi(B) is read off the cycle itself as
/// chi(x_1) * chi(x_2), so a fixed point or a chi-constant cycle is rejected.
cycle normalize_cycle(std::span<const integer> c, const quad_char &chi);

/// "0.(a1 a2 ... ae)_B"
std::string format_expansion(const expansion_period &p);

} // namespace hquad
