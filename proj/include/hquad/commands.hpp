#pragma once

#include "hquad/arith.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hquad::cli {

// Exit statuses shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_invalid_input = 2;

enum class report_format { text, csv, json };

struct classnum_options {
    integer d = 0;
    std::vector<integer> bases;        // empty: every base in [2, 13] prime to N
    std::vector<std::string> methods;  // empty: all applicable
};

/// Known method names for --method.
const std::vector<std::string> &method_names();

int cmd_classnum(const classnum_options &opt, std::ostream &out, std::ostream &err);

struct expand_options {
    std::optional<integer> d;
    std::optional<integer> n;
    integer base = 10;
    integer x = 1;
};

int cmd_expand(const expand_options &opt, std::ostream &out, std::ostream &err);

int cmd_ek(integer d, integer base, std::ostream &out, std::ostream &err);

int cmd_girstmair(integer p, std::optional<integer> base, std::ostream &out, std::ostream &err);

struct verify_options {
    integer from = 0;
    integer to = 0;
    std::vector<integer> bases; // empty: 2 .. 13
    report_format format = report_format::text;
    unsigned jobs = 1;
};

int cmd_verify(const verify_options &opt, std::ostream &out, std::ostream &err);

} // namespace hquad::cli
