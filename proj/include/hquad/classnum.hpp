#pragma once

#include "hquad/arith.hpp"
#include "hquad/discriminant.hpp"
#include "hquad/expansion.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace hquad {

/// Exact reduced fraction with positive denominator.
struct rational {
    integer num = 0;
    integer den = 1;

    rational() = default;
    rational(integer n, integer d = 1);

    friend rational operator+(const rational &a, const rational &b);
    friend bool operator==(const rational &, const rational &) = default;
};

enum class method {
    dirichlet,     // -(1/N) sum chi(x) x
    cycle_digits,  // digit sums over the B-cycles
    floor_sum,     // -sum chi(x) [Bx/N] / (B - chi(B))
    interval_sum,  // weighted E_k(B)
    coarse_interval_sum, // E_k(B) regrouped for a divisor B1 of B
    quarter_sum,   // even D: sum of chi over (0, N/4)
    sixth_sum,     // odd D, 3 does not divide D: |sum of chi over (0, N/6)|
    girstmair,     // primitive-root digits of 1/p
};

std::string_view to_string(method m);

struct h_result {
    discriminant disc;
    integer h;
    method how;
    integer base = 0;    // 0 when the method has no base
    integer divisor = 0; // B1 for coarse_interval_sum, 0 otherwise
    integer raw_sum;     // pre-division sum; -N*h for dirichlet
};

h_result h_dirichlet(const quad_char &chi);

/// -(1/N) sum over the cycle of chi(x) x.
rational h_cycle_contribution(std::span<const integer> c, const quad_char &chi);

h_result h_theorem1(const quad_char &chi, integer base);
h_result h_floor_formula(const quad_char &chi, integer base);

/*
 * Signed character counts over the B intervals (kN/B, (k+1)N/B) of (0, N].
 * Interval membership is floor(Bx/N) = k; no unit lies on an endpoint.
 */
struct ek_table {
    discriminant disc;
    integer base;
    std::vector<integer> entries; // E_k
    std::vector<integer> plus;    // |X_k^+|
    std::vector<integer> minus;   // |X_k^-|

    integer modulus() const noexcept { return disc.modulus(); }
    /// Endpoints of interval k as unreduced fractions (numerator, base).
    std::pair<rational, rational> interval(integer k) const;
    /// Sum of entries kB2 .. kB2+B2-1, i.e. E_k(B1) for B = B1 B2.
    integer coarse(integer k, integer b2) const;
};

ek_table make_ek_table(const quad_char &chi, integer base);

h_result h_from_ek(const quad_char &chi, integer base);
h_result h_from_ek(const ek_table &table, const quad_char &chi);
h_result h_from_ek_factored(const quad_char &chi, integer base, integer b1);
h_result h_from_ek_factored(const ek_table &table, const quad_char &chi, integer b1);

/// N - x.
integer xi(integer x, integer n);
/// x + N/2 below N/2, x - N/2 above; N = 0 (mod 4).
integer eta(integer x, integer n);
/// xi(eta(x)): reflection through N/4 on the left half, 3N/4 on the right.
integer lambda_map(integer x, integer n);

} // namespace hquad
