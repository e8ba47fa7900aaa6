#pragma once

#include "hquad/arith.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace hquad {

/// Shape of the quadratic character attached to a discriminant.
///   odd: D = m,  m = 1 (mod 4)
///   d1:  D = 4m, m = 3 (mod 4)
///   d2:  D = 4m, m = 2n, n = 1 (mod 4)
///   d3:  D = 4m, m = 2n, n = 3 (mod 4)
enum class disc_case { odd, d1, d2, d3 };

std::string_view to_string(disc_case c);

/*
 * A fundamental discriminant D < -4 of an imaginary quadratic field.
 * Only constructible through the two validating factories, so every
 * instance satisfies the invariants above.
 */
class discriminant {
  public:
    /// From the square-free generator m < 0 of Q(sqrt(m)).
    static discriminant from_generator(integer m);
    /// Accepts exactly the fundamental discriminants below -4.
    static discriminant from_discriminant(integer d);

    integer value() const noexcept { return d_; }
    integer modulus() const noexcept { return -d_; }
    integer generator() const noexcept { return m_; }
    disc_case kind() const noexcept { return kind_; }
    bool is_odd() const noexcept { return kind_ == disc_case::odd; }

    /// Modulus of the Jacobi factor in the character: |m| for odd and d1,
    /// |n| for d2 and d3.
    integer jacobi_modulus() const noexcept;

    friend bool operator==(const discriminant &, const discriminant &) = default;

  private:
    discriminant(integer d, integer m, disc_case kind) : d_(d), m_(m), kind_(kind) {}

    integer d_;
    integer m_;
    disc_case kind_;
};

/// (-1)^((x-1)/2) for odd x.
int chi4(integer x);
/// (-1)^((x^2-1)/8) for odd x.
int chi8(integer x);

/// chi_D(x) straight from the case formula; any integer x.
int chi(const discriminant &d, integer x);

/*
 * The character chi_D with its values on [1, N] tabulated once, so hot
 * loops over X are a table lookup. Immutable after construction.
 */
class quad_char {
  public:
    explicit quad_char(const discriminant &d);

    const discriminant &disc() const noexcept { return disc_; }
    integer modulus() const noexcept { return disc_.modulus(); }

    int operator()(integer x) const {
        integer n = modulus();
        integer r = x % n;
        if (r <= 0)
            r += n;
        return values_[static_cast<std::size_t>(r)];
    }

    /// Elements of X = { 1 <= x <= N : gcd(x, N) = 1 } in increasing order.
    const std::vector<integer> &units() const noexcept { return units_; }

  private:
    discriminant disc_;
    std::vector<std::int8_t> values_; // index 0 unused
    std::vector<integer> units_;
};

} // namespace hquad
