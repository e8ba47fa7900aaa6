#include "hquad/commands.hpp"

#include "hquad/classnum.hpp"
#include "hquad/error.hpp"
#include "hquad/expansion.hpp"
#include "hquad/report.hpp"
#include "hquad/theorems.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hquad::cli {

namespace {

std::vector<integer> default_bases(integer n) {
    std::vector<integer> out;
    for (integer b = 2; b <= 13; ++b)
        if (gcd(b, n) == 1)
            out.push_back(b);
    return out;
}

std::string join(const std::vector<integer> &v, std::string_view sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

std::string fraction(const rational &r) {
    return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

int report_error(const error &ex, std::ostream &err) {
    err << "error: " << ex.what() << '\n';
    return ex.code() == errc::internal_consistency ? exit_check_failed : exit_invalid_input;
}

} // namespace

const std::vector<std::string> &method_names() {
    static const std::vector<std::string> names{"dirichlet", "digits",  "floor", "interval",
                                                "coarse",    "quarter", "sixth"};
    return names;
}

int cmd_classnum(const classnum_options &opt, std::ostream &out, std::ostream &err) {
    for (const auto &m : opt.methods) {
        if (std::find(method_names().begin(), method_names().end(), m) == method_names().end()) {
            err << "error: unknown method '" << m << "'\n";
            return exit_invalid_input;
        }
    }
    try {
        auto d = discriminant::from_discriminant(opt.d);
        quad_char chi(d);
        integer n = d.modulus();
        auto bases = opt.bases.empty() ? default_bases(n) : opt.bases;
        for (integer b : bases) {
            if (b < 2 || gcd(b, n) != 1) {
                err << "error: base " << b << " is not prime to N = " << n << '\n';
                return exit_invalid_input;
            }
        }
        auto wanted = [&](std::string_view m) {
            return opt.methods.empty() ||
                   std::find(opt.methods.begin(), opt.methods.end(), m) != opt.methods.end();
        };

        out << "D = " << d.value() << "  N = " << n << "  case " << to_string(d.kind())
            << "  generator m = " << d.generator() << '\n';
        out << std::left << std::setw(22) << "method" << std::right << std::setw(6) << "base"
            << std::setw(6) << "B1" << std::setw(12) << "raw sum" << std::setw(8) << "h" << '\n';

        std::vector<h_result> results;
        auto emit = [&](const h_result &r) {
            out << std::left << std::setw(22) << to_string(r.how) << std::right << std::setw(6)
                << (r.base ? std::to_string(r.base) : "-") << std::setw(6)
                << (r.divisor ? std::to_string(r.divisor) : "-") << std::setw(12) << r.raw_sum
                << std::setw(8) << r.h << '\n';
            results.push_back(r);
        };

        int status = exit_ok;
        auto guarded = [&](auto &&body) {
            try {
                body();
            } catch (const error &ex) {
                err << "error: " << ex.what() << '\n';
                status = ex.code() == errc::internal_consistency ? exit_check_failed
                                                                 : exit_invalid_input;
            }
        };

        if (wanted("dirichlet"))
            guarded([&] { emit(h_dirichlet(chi)); });
        for (integer b : bases) {
            if (wanted("digits"))
                guarded([&] { emit(h_theorem1(chi, b)); });
            if (wanted("floor"))
                guarded([&] { emit(h_floor_formula(chi, b)); });
            if (wanted("interval"))
                guarded([&] { emit(h_from_ek(chi, b)); });
            if (wanted("coarse"))
                for (integer b1 = 2; b1 < b; ++b1)
                    if (b % b1 == 0)
                        guarded([&] { emit(h_from_ek_factored(chi, b, b1)); });
        }
        if (wanted("quarter")) {
            if (!d.is_odd())
                guarded([&] { emit(h_quarter_sum(chi)); });
            else if (!opt.methods.empty())
                out << "quarter: not applicable to odd D\n";
        }
        if (wanted("sixth")) {
            if (d.is_odd() && d.value() % 3 != 0)
                guarded([&] { emit(h_abs_sixth(chi)); });
            else if (!opt.methods.empty())
                out << "sixth: needs odd D prime to 3\n";
        }

        if (results.empty()) {
            if (status == exit_ok)
                err << "error: no applicable method\n";
            return status == exit_ok ? exit_invalid_input : status;
        }
        bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const h_result &r) { return r.h == results.front().h; });
        if (agree && status == exit_ok) {
            out << "all " << results.size() << " evaluations agree: h(" << d.value()
                << ") = " << results.front().h << '\n';
            return exit_ok;
        }
        out << "DISAGREEMENT among the evaluations of h(" << d.value() << ")\n";
        return status == exit_ok ? exit_check_failed : status;
    } catch (const error &ex) {
        return report_error(ex, err);
    }
}

int cmd_expand(const expand_options &opt, std::ostream &out, std::ostream &err) {
    try {
        std::optional<discriminant> d;
        integer n = 0;
        if (opt.d) {
            d = discriminant::from_discriminant(*opt.d);
            n = d->modulus();
            if (opt.n && *opt.n != n) {
                err << "error: -N " << *opt.n << " does not match |D| = " << n << '\n';
                return exit_invalid_input;
            }
        } else if (opt.n) {
            n = *opt.n;
        } else {
            err << "error: expand needs -D or -N\n";
            return exit_invalid_input;
        }

        auto p = expand(opt.x, opt.base, n);
        out << opt.x << "/" << n << " in base " << opt.base << ": " << format_expansion(p) << '\n';
        out << "period e = " << p.period() << '\n';
        out << "cycle (" << join(p.cycle, ", ") << ")\n";
        if (d) {
            quad_char chi(*d);
            int chi_base = chi(opt.base);
            out << "chi(B) = " << chi_base << ", chi(x1) = " << chi(opt.x) << '\n';
            if (chi_base == -1) {
                auto normalized = normalize_cycle(p.cycle, chi);
                if (chi(opt.x) == 1)
                    out << "normalized\n";
                else
                    out << "not normalized; normalized form (" << join(normalized, ", ") << ")\n";
            } else {
                out << "chi(B) = +1: normalization not needed, chi(C) = " << chi(opt.x) << '\n';
            }
        }
        return exit_ok;
    } catch (const error &ex) {
        return report_error(ex, err);
    }
}

int cmd_ek(integer dv, integer base, std::ostream &out, std::ostream &err) {
    try {
        auto d = discriminant::from_discriminant(dv);
        quad_char chi(d);
        auto t = make_ek_table(chi, base);
        out << "D = " << d.value() << "  N = " << d.modulus() << "  B = " << base
            << "  chi(B) = " << chi(base) << '\n';
        out << std::setw(4) << "k" << "  " << std::left << std::setw(24) << "interval" << std::right
            << std::setw(6) << "X+" << std::setw(6) << "X-" << std::setw(8) << "E_k" << '\n';
        for (integer k = 0; k < base; ++k) {
            auto [lo, hi] = t.interval(k);
            auto i = static_cast<std::size_t>(k);
            out << std::setw(4) << k << "  " << std::left << std::setw(24)
                << "(" + fraction(lo) + ", " + fraction(hi) + ")" << std::right << std::setw(6)
                << t.plus[i] << std::setw(6) << t.minus[i] << std::setw(8) << t.entries[i] << '\n';
        }
        auto r = h_from_ek(t, chi);
        out << "weighted sum";
        for (integer k = 0; k < base / 2; ++k)
            out << (k ? " + " : " ") << (base - 1 - 2 * k) << "*E" << k;
        out << " = " << r.raw_sum << " = (" << base << " - (" << chi(base) << ")) * h  =>  h = "
            << r.h << '\n';
        return exit_ok;
    } catch (const error &ex) {
        return report_error(ex, err);
    }
}

int cmd_girstmair(integer p, std::optional<integer> base, std::ostream &out, std::ostream &err) {
    try {
        if (p <= 3 || !is_prime(p) || p % 4 != 3) {
            err << "error: p = " << p << " must be a prime above 3 with p = 3 (mod 4)\n";
            return exit_invalid_input;
        }
        integer b = base ? *base : least_primitive_root(p);
        if (b < 2 || gcd(b, p) != 1 || multiplicative_order(b, p) != p - 1) {
            err << "error: " << b << " is not a primitive root mod " << p << '\n';
            return exit_invalid_input;
        }
        auto period = expand(1, b, p);
        integer alternating = 0;
        for (std::size_t i = 0; i < period.digits.size(); ++i)
            alternating += (i % 2 == 0 ? -1 : 1) * period.digits[i];
        out << "p = " << p << "  B = " << b << (base ? "" : " (least primitive root)") << '\n';
        out << "1/" << p << " = " << format_expansion(period) << '\n';
        out << "alternating digit sum = " << alternating << '\n';
        quad_char chi(discriminant::from_discriminant(-p));
        integer reference = h_dirichlet(chi).h;
        if (alternating % (b + 1) != 0) {
            out << "alternating sum is not divisible by B + 1 = " << b + 1 << '\n';
            return exit_check_failed;
        }
        integer h = alternating / (b + 1);
        out << "h(-" << p << ") = " << alternating << " / " << b + 1 << " = " << h << '\n';
        out << "Dirichlet sum gives h = " << reference << (h == reference ? "  (agree)" : "  (DISAGREE)")
            << '\n';
        return h == reference ? exit_ok : exit_check_failed;
    } catch (const error &ex) {
        return report_error(ex, err);
    }
}

int cmd_verify(const verify_options &opt, std::ostream &out, std::ostream &err) {
    try {
        std::vector<integer> bases = opt.bases;
        if (bases.empty())
            for (integer b = 2; b <= 13; ++b)
                bases.push_back(b);
        auto report = verify_range(opt.from, opt.to, std::move(bases), opt.jobs);
        switch (opt.format) {
        case report_format::text: out << to_text(report); break;
        case report_format::csv: out << to_csv(report); break;
        case report_format::json: out << to_json(report); break;
        }
        return report.summary.pass ? exit_ok : exit_check_failed;
    } catch (const error &ex) {
        return report_error(ex, err);
    }
}

} // namespace hquad::cli
