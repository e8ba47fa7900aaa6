#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hquad {

enum class errc {
    invalid_modulus,
    invalid_argument,
    not_coprime,
    invalid_generator,
    excluded_discriminant,
    not_fundamental,
    normalization_undefined,
    invalid_factorization,
    wrong_parity,
    divisible_by_three,
    undefined_for_odd_discriminant,
    overflow,
    internal_consistency,
};

std::string_view to_string(errc code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to a diagnostic.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

} // namespace hquad
