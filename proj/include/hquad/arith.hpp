#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hquad {

using integer = std::int64_t;
__extension__ typedef __int128 wide_integer;

// Overflow-checked primitives; throw error(errc::overflow) instead of wrapping.
integer checked_add(integer a, integer b);
integer checked_sub(integer a, integer b);
integer checked_mul(integer a, integer b);

/// Nonnegative gcd, gcd(0, 0) = 0.
integer gcd(integer a, integer b);

/// Representative of z mod n taken from [1, n] rather than [0, n).
/// Multiples of n map to n itself.
struct residue_rep {
    integer value;
    integer modulus;

    residue_rep(integer z, integer n);

    friend bool operator==(const residue_rep &, const residue_rep &) = default;
};

/// Reduction into [0, n); n > 0.
integer mod_floor(integer z, integer n);

/// b^e mod n in [0, n). Products are formed in 128 bits.
integer mod_pow(integer b, integer e, integer n);

std::vector<std::pair<integer, int>> factorize(integer n);
integer euler_phi(integer n);
bool is_prime(integer n);

/// Smallest e >= 1 with b^e = 1 (mod n). Requires gcd(b, n) = 1.
integer multiplicative_order(integer b, integer n);

/// Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1.
int jacobi(integer a, integer n);

/// True iff no prime square divides m (m >= 1).
bool is_squarefree(integer m);

/// Least primitive root modulo a prime p, found by search.
integer least_primitive_root(integer p);

} // namespace hquad
