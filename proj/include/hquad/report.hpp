#pragma once

#include "hquad/arith.hpp"
#include "hquad/discriminant.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hquad {

enum class check_state { pass, fail, not_applicable };

std::string_view to_string(check_state s);

/// Check columns, in report order.
///   agree   every per-base class number equals the Dirichlet one
///   coarse  the regrouped interval sum for every divisor B1 of every base
///   b2, b4, b6, sixth, b12         odd D
///   quarter, s1_s2                 even D
inline constexpr std::array<std::string_view, 9> check_names{
    "agree", "coarse", "b2", "b4", "b6", "sixth", "b12", "quarter", "s1_s2"};

struct base_values {
    integer base;
    // Empty when the base shares a factor with N or the evaluation failed.
    std::optional<integer> digits;
    std::optional<integer> floor;
    std::optional<integer> interval;

    friend bool operator==(const base_values &, const base_values &) = default;
};

struct verification_record {
    integer d;
    integer n;
    disc_case kind;
    std::optional<integer> h;
    std::vector<base_values> per_base;
    std::array<check_state, check_names.size()> checks;
    std::string error; // first failure message, empty on success

    bool pass() const;
    check_state check(std::string_view name) const;

    friend bool operator==(const verification_record &, const verification_record &) = default;
};

struct verification_summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<integer> first_failure;
    double elapsed_ms = 0;
    bool pass = true;
};

struct verification_report {
    integer from;
    integer to;
    std::vector<integer> bases;
    std::vector<verification_record> records; // decreasing D
    verification_summary summary;
};

verification_record verify_discriminant(const discriminant &d, std::span<const integer> bases);

/// Every fundamental D with from <= D <= to, sharded over `jobs` threads.
/// Requires from <= to < -4.
verification_report verify_range(integer from, integer to, std::vector<integer> bases,
                                 unsigned jobs = 1);

verification_summary summarize(std::span<const verification_record> records);

std::string to_text(const verification_report &r);
std::string to_csv(const verification_report &r);
std::string to_json(const verification_report &r);

/// Inverse of to_csv / to_json. The CSV form carries no range, so from/to
/// are taken from the records; the summary is recomputed (elapsed_ms = 0).
verification_report parse_csv(std::string_view text);
verification_report parse_json(std::string_view text);

} // namespace hquad
