#include "hquad/arith.hpp"

#include "hquad/error.hpp"

#include <string>

namespace hquad {

std::string_view to_string(errc code) {
    switch (code) {
    case errc::invalid_modulus: return "invalid modulus";
    case errc::invalid_argument: return "invalid argument";
    case errc::not_coprime: return "not coprime";
    case errc::invalid_generator: return "invalid generator";
    case errc::excluded_discriminant: return "excluded discriminant";
    case errc::not_fundamental: return "not a fundamental discriminant";
    case errc::normalization_undefined: return "normalization undefined";
    case errc::invalid_factorization: return "invalid factorization";
    case errc::wrong_parity: return "wrong parity";
    case errc::divisible_by_three: return "divisible by three";
    case errc::undefined_for_odd_discriminant: return "undefined for odd discriminant";
    case errc::overflow: return "integer overflow";
    case errc::internal_consistency: return "internal consistency failure";
    }
    return "unknown error";
}

integer checked_add(integer a, integer b) {
    integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::overflow, std::to_string(a) + " + " + std::to_string(b));
    return r;
}

integer checked_sub(integer a, integer b) {
    integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw error(errc::overflow, std::to_string(a) + " - " + std::to_string(b));
    return r;
}

integer checked_mul(integer a, integer b) {
    integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::overflow, std::to_string(a) + " * " + std::to_string(b));
    return r;
}

integer gcd(integer a, integer b) {
    // std::gcd is undefined when |a| is not representable, so do it by hand
    // on unsigned magnitudes.
    auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (ub != 0) {
        auto t = ua % ub;
        ua = ub;
        ub = t;
    }
    if (ua > static_cast<std::uint64_t>(INT64_MAX))
        throw error(errc::overflow, "gcd magnitude exceeds 63 bits");
    return static_cast<integer>(ua);
}

integer mod_floor(integer z, integer n) {
    if (n <= 0)
        throw error(errc::invalid_modulus, "modulus must be positive, got " + std::to_string(n));
    integer r = z % n;
    return r < 0 ? r + n : r;
}

residue_rep::residue_rep(integer z, integer n) : value(0), modulus(n) {
    if (n <= 1)
        throw error(errc::invalid_modulus, "modulus must exceed 1, got " + std::to_string(n));
    integer r = mod_floor(z, n);
    value = r == 0 ? n : r;
}

namespace {

integer mul_mod(integer a, integer b, integer n) {
    return static_cast<integer>((static_cast<wide_integer>(a) * b) % n);
}

} // namespace

integer mod_pow(integer b, integer e, integer n) {
    if (n <= 1)
        throw error(errc::invalid_modulus, "modulus must exceed 1, got " + std::to_string(n));
    if (e < 0)
        throw error(errc::invalid_argument, "negative exponent");
    integer result = 1 % n;
    integer base = mod_floor(b, n);
    while (e > 0) {
        if (e & 1)
            result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    return result;
}

std::vector<std::pair<integer, int>> factorize(integer n) {
    if (n < 1)
        throw error(errc::invalid_argument, "factorize needs n >= 1");
    std::vector<std::pair<integer, int>> out;
    for (integer p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

integer euler_phi(integer n) {
    integer phi = n;
    for (auto [p, k] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

bool is_prime(integer n) {
    if (n < 2)
        return false;
    auto f = factorize(n);
    return f.size() == 1 && f.front().second == 1;
}

integer multiplicative_order(integer b, integer n) {
    if (n <= 1)
        throw error(errc::invalid_modulus, "modulus must exceed 1, got " + std::to_string(n));
    if (gcd(b, n) != 1)
        throw error(errc::not_coprime,
                    "gcd(" + std::to_string(b) + ", " + std::to_string(n) + ") != 1");
    integer e = euler_phi(n);
    for (auto [p, k] : factorize(e)) {
        for (int i = 0; i < k && e % p == 0 && mod_pow(b, e / p, n) == 1; ++i)
            e /= p;
    }
    return e;
}

int jacobi(integer a, integer n) {
    if (n <= 0 || n % 2 == 0)
        throw error(errc::invalid_argument,
                    "Jacobi symbol needs a positive odd modulus, got " + std::to_string(n));
    a = mod_floor(a, n);
    int t = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            integer r = n % 8;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

bool is_squarefree(integer m) {
    if (m < 1)
        throw error(errc::invalid_argument, "is_squarefree needs m >= 1");
    for (integer p = 2; p <= m / p; ++p) {
        if (m % p != 0)
            continue;
        m /= p;
        if (m % p == 0)
            return false;
    }
    return true;
}

integer least_primitive_root(integer p) {
    if (!is_prime(p))
        throw error(errc::invalid_argument, std::to_string(p) + " is not prime");
    if (p == 2)
        return 1;
    auto factors = factorize(p - 1);
    for (integer g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto [q, k] : factors) {
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return g;
    }
    throw error(errc::internal_consistency, "no primitive root found mod " + std::to_string(p));
}

} // namespace hquad
