#include "hquad/discriminant.hpp"

#include "hquad/error.hpp"

#include <string>

namespace hquad {

std::string_view to_string(disc_case c) {
    switch (c) {
    case disc_case::odd: return "odd";
    case disc_case::d1: return "D1";
    case disc_case::d2: return "D2";
    case disc_case::d3: return "D3";
    }
    return "?";
}

namespace {

void reject_small(integer d) {
    if (d == -3 || d == -4)
        throw error(errc::excluded_discriminant,
                    "D = " + std::to_string(d) + " is excluded (the formulas need D < -4)");
}

disc_case even_case(integer m) {
    // m = 2 or 3 (mod 4) here.
    if (mod_floor(m, 4) == 3)
        return disc_case::d1;
    integer n = m / 2;
    return mod_floor(n, 4) == 1 ? disc_case::d2 : disc_case::d3;
}

} // namespace

discriminant discriminant::from_generator(integer m) {
    if (m >= 0)
        throw error(errc::invalid_generator, "generator must be negative, got " + std::to_string(m));
    if (m < INT64_MIN / 4 || !is_squarefree(-m))
        throw error(errc::invalid_generator, std::to_string(m) + " is not square-free");
    if (mod_floor(m, 4) == 1) {
        reject_small(m);
        return discriminant(m, m, disc_case::odd);
    }
    integer d = 4 * m;
    reject_small(d);
    return discriminant(d, m, even_case(m));
}

discriminant discriminant::from_discriminant(integer d) {
    reject_small(d);
    if (d >= -4)
        throw error(errc::not_fundamental, "D = " + std::to_string(d) + " is not below -4");
    if (mod_floor(d, 4) == 1) {
        if (!is_squarefree(-d))
            throw error(errc::not_fundamental, "D = " + std::to_string(d) + " is not square-free");
        return discriminant(d, d, disc_case::odd);
    }
    if (mod_floor(d, 4) != 0)
        throw error(errc::not_fundamental,
                    "D = " + std::to_string(d) + " is neither 0 nor 1 mod 4");
    integer m = d / 4;
    integer r = mod_floor(m, 4);
    if (r != 2 && r != 3)
        throw error(errc::not_fundamental,
                    "D = 4*" + std::to_string(m) + " with m = " + std::to_string(r) + " (mod 4)");
    if (!is_squarefree(-m))
        throw error(errc::not_fundamental,
                    "D = 4*" + std::to_string(m) + " with m not square-free");
    return discriminant(d, m, even_case(m));
}

integer discriminant::jacobi_modulus() const noexcept {
    switch (kind_) {
    case disc_case::odd:
    case disc_case::d1: return -m_;
    case disc_case::d2:
    case disc_case::d3: return -m_ / 2;
    }
    return 1;
}

int chi4(integer x) {
    integer r = mod_floor(x, 4);
    if (r % 2 == 0)
        throw error(errc::invalid_argument, "chi4 needs odd x, got " + std::to_string(x));
    return r == 1 ? 1 : -1;
}

int chi8(integer x) {
    integer r = mod_floor(x, 8);
    if (r % 2 == 0)
        throw error(errc::invalid_argument, "chi8 needs odd x, got " + std::to_string(x));
    return (r == 1 || r == 7) ? 1 : -1;
}

int chi(const discriminant &d, integer x) {
    integer n = d.modulus();
    x = residue_rep(x, n).value;
    if (gcd(x, n) != 1)
        return 0;
    int j = jacobi(x, d.jacobi_modulus());
    switch (d.kind()) {
    case disc_case::odd: return j;
    case disc_case::d1: return chi4(x) * j;
    case disc_case::d2: return chi8(x) * j;
    case disc_case::d3: return chi4(x) * chi8(x) * j;
    }
    return 0;
}

quad_char::quad_char(const discriminant &d) : disc_(d) {
    integer n = d.modulus();
    values_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (integer x = 1; x <= n; ++x) {
        int v = chi(d, x);
        values_[static_cast<std::size_t>(x)] = static_cast<std::int8_t>(v);
        if (gcd(x, n) == 1)
            units_.push_back(x);
    }
}

} // namespace hquad
