#pragma once

#include "hquad/classnum.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hquad {

enum class theorem { b2, b4, b6, b12, s1_s2 };

std::string_view to_string(theorem t);

/// N mod 24 for odd D with 3 not dividing D, and the (chi(2), chi(3)) it forces.
struct congruence_class24 {
    int residue; // 7, 11, 19 or 23
    int chi2;
    int chi3;
};

congruence_class24 classify_mod24(const discriminant &d);

/// Expected and observed values side by side; expected values are already
/// multiplied out by h.
struct theorem_check {
    discriminant disc;
    theorem id;
    std::vector<std::string> labels;
    std::vector<integer> expected;
    std::vector<integer> observed;
    bool pass;
};

// Odd discriminants.
theorem_check check_b2(const quad_char &chi);
theorem_check check_b4(const quad_char &chi);
theorem_check check_b6(const quad_char &chi);
/// Needs 3 not dividing D. Throws internal_consistency unless the result
/// equals the Dirichlet class number.
h_result h_abs_sixth(const quad_char &chi);
/// E_1(12) .. E_5(12) from h and e0 = E_0(12).
theorem_check check_b12(const quad_char &chi, integer h, integer e0);

// Even discriminants.
h_result h_quarter_sum(const quad_char &chi);
theorem_check check_s1_s2(const quad_char &chi);

} // namespace hquad
