#include "hquad/report.hpp"

#include "hquad/classnum.hpp"
#include "hquad/error.hpp"
#include "hquad/theorems.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <map>
#include <sstream>
#include <thread>

namespace hquad {

std::string_view to_string(check_state s) {
    switch (s) {
    case check_state::pass: return "pass";
    case check_state::fail: return "fail";
    case check_state::not_applicable: return "na";
    }
    return "?";
}

namespace {

std::size_t check_index(std::string_view name) {
    auto it = std::find(check_names.begin(), check_names.end(), name);
    if (it == check_names.end())
        throw error(errc::invalid_argument, "unknown check " + std::string(name));
    return static_cast<std::size_t>(it - check_names.begin());
}

check_state parse_state(std::string_view s) {
    if (s == "pass")
        return check_state::pass;
    if (s == "fail")
        return check_state::fail;
    if (s == "na")
        return check_state::not_applicable;
    throw error(errc::invalid_argument, "bad check state '" + std::string(s) + "'");
}

disc_case parse_case(std::string_view s) {
    for (auto c : {disc_case::odd, disc_case::d1, disc_case::d2, disc_case::d3})
        if (to_string(c) == s)
            return c;
    throw error(errc::invalid_argument, "bad case tag '" + std::string(s) + "'");
}

// Accumulates check outcomes; the first failure message wins.
class recorder {
  public:
    explicit recorder(verification_record &rec) : rec_(rec) {
        rec_.checks.fill(check_state::not_applicable);
    }

    template <class F> void run(std::string_view name, F &&body) {
        auto &slot = rec_.checks[check_index(name)];
        try {
            bool ok = body();
            if (!ok)
                note(std::string(name) + " mismatch");
            if (slot != check_state::fail)
                slot = ok ? check_state::pass : check_state::fail;
        } catch (const std::exception &ex) {
            note(std::string(name) + ": " + ex.what());
            slot = check_state::fail;
        }
    }

    void note(std::string msg) {
        if (rec_.error.empty())
            rec_.error = std::move(msg);
    }

  private:
    verification_record &rec_;
};

template <class F> std::optional<integer> attempt(recorder &rec, F &&body) {
    try {
        return body();
    } catch (const std::exception &ex) {
        rec.note(ex.what());
        return std::nullopt;
    }
}

} // namespace

bool verification_record::pass() const {
    return error.empty() && h.has_value() &&
           std::none_of(checks.begin(), checks.end(),
                        [](check_state s) { return s == check_state::fail; });
}

check_state verification_record::check(std::string_view name) const {
    return checks[check_index(name)];
}

verification_record verify_discriminant(const discriminant &d, std::span<const integer> bases) {
    verification_record rec{d.value(), d.modulus(), d.kind(), std::nullopt, {}, {}, {}};
    recorder log(rec);
    quad_char chi(d);
    integer n = d.modulus();

    rec.h = attempt(log, [&] { return h_dirichlet(chi).h; });

    bool any_base = false;
    bool agree = rec.h.has_value();
    bool coarse_applicable = false;
    bool coarse_ok = true;
    for (integer b : bases) {
        base_values v{b, std::nullopt, std::nullopt, std::nullopt};
        if (gcd(b, n) == 1) {
            any_base = true;
            v.digits = attempt(log, [&] { return h_theorem1(chi, b).h; });
            v.floor = attempt(log, [&] { return h_floor_formula(chi, b).h; });
            std::optional<ek_table> table;
            try {
                table = make_ek_table(chi, b);
            } catch (const std::exception &ex) {
                log.note(ex.what());
            }
            if (table) {
                v.interval = attempt(log, [&] { return h_from_ek(*table, chi).h; });
                for (integer b1 = 2; b1 < b; ++b1) {
                    if (b % b1 != 0)
                        continue;
                    coarse_applicable = true;
                    auto hc = attempt(log, [&] { return h_from_ek_factored(*table, chi, b1).h; });
                    coarse_ok = coarse_ok && hc.has_value() && hc == rec.h;
                }
            } else {
                coarse_ok = false;
            }
            for (const auto &value : {v.digits, v.floor, v.interval})
                agree = agree && value.has_value() && value == rec.h;
        }
        rec.per_base.push_back(v);
    }
    if (any_base)
        log.run("agree", [&] { return agree; });
    if (coarse_applicable)
        log.run("coarse", [&] { return coarse_ok; });

    bool prime_to_three = d.value() % 3 != 0;
    if (d.is_odd()) {
        log.run("b2", [&] { return check_b2(chi).pass; });
        log.run("b4", [&] { return check_b4(chi).pass; });
        if (prime_to_three) {
            log.run("b6", [&] { return check_b6(chi).pass; });
            log.run("sixth", [&] { return h_abs_sixth(chi).h == rec.h; });
            log.run("b12", [&] {
                integer h = h_dirichlet(chi).h;
                integer e0 = make_ek_table(chi, 12).entries[0];
                return check_b12(chi, h, e0).pass;
            });
        }
    } else {
        log.run("quarter", [&] { return h_quarter_sum(chi).h == rec.h; });
        if (prime_to_three)
            log.run("s1_s2", [&] { return check_s1_s2(chi).pass; });
    }
    return rec;
}

verification_summary summarize(std::span<const verification_record> records) {
    verification_summary s;
    s.total = records.size();
    for (const auto &r : records) {
        if (r.pass()) {
            ++s.passed;
        } else {
            ++s.failed;
            if (!s.first_failure)
                s.first_failure = r.d;
        }
    }
    s.pass = s.failed == 0;
    return s;
}

verification_report verify_range(integer from, integer to, std::vector<integer> bases,
                                 unsigned jobs) {
    if (from > to)
        throw error(errc::invalid_argument, "empty range: --from " + std::to_string(from) +
                                                " is above --to " + std::to_string(to));
    if (to >= -4)
        throw error(errc::invalid_argument, "range must lie below -4");
    for (integer b : bases)
        if (b < 2)
            throw error(errc::invalid_argument, "base must be at least 2, got " + std::to_string(b));

    auto start = std::chrono::steady_clock::now();
    std::vector<discriminant> discs;
    for (integer d = to; d >= from; --d) {
        try {
            discs.push_back(discriminant::from_discriminant(d));
        } catch (const error &) {
        }
    }

    std::vector<verification_record> records(discs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < discs.size(); i = next++)
            records[i] = verify_discriminant(discs[i], bases);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    verification_report report{from, to, std::move(bases), std::move(records), {}};
    report.summary = summarize(report.records);
    report.summary.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// --- text -----------------------------------------------------------------

namespace {

std::string opt_str(const std::optional<integer> &v) {
    return v ? std::to_string(*v) : std::string();
}

} // namespace

std::string to_text(const verification_report &r) {
    std::ostringstream os;
    os << "range " << r.from << " .. " << r.to << ", bases";
    for (integer b : r.bases)
        os << ' ' << b;
    os << '\n';
    for (const auto &rec : r.records) {
        os << "D = " << rec.d << " (" << to_string(rec.kind) << ")  h = "
           << (rec.h ? std::to_string(*rec.h) : std::string("?")) << "  ";
        for (std::size_t i = 0; i < check_names.size(); ++i)
            if (rec.checks[i] != check_state::not_applicable)
                os << ' ' << check_names[i] << '=' << to_string(rec.checks[i]);
        os << (rec.pass() ? "  ok" : "  FAILED");
        if (!rec.error.empty())
            os << "  [" << rec.error << ']';
        os << '\n';
    }
    const auto &s = r.summary;
    os << "summary: " << s.total << " discriminants, " << s.passed << " passed, " << s.failed
       << " failed";
    if (s.first_failure)
        os << ", first failure at D = " << *s.first_failure;
    os << ", " << static_cast<long long>(s.elapsed_ms) << " ms\n";
    os << (s.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

// --- csv ------------------------------------------------------------------

namespace {

std::vector<std::string> column_names(std::span<const integer> bases) {
    std::vector<std::string> cols{"D", "N", "case", "h_dirichlet"};
    for (std::string_view family : {"h_digits_B", "h_floor_B", "h_interval_B"})
        for (integer b : bases)
            cols.push_back(std::string(family) + std::to_string(b));
    for (auto name : check_names)
        cols.emplace_back(name);
    cols.emplace_back("pass");
    cols.emplace_back("error");
    return cols;
}

std::string csv_quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

integer parse_int(std::string_view s) {
    integer v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw error(errc::invalid_argument, "bad integer '" + std::string(s) + "'");
    return v;
}

std::optional<integer> parse_opt(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    return parse_int(s);
}

void finish_parsed(verification_report &r) {
    if (!r.records.empty()) {
        r.to = r.records.front().d;
        r.from = r.records.back().d;
    }
    r.summary = summarize(r.records);
}

} // namespace

std::string to_csv(const verification_report &r) {
    std::ostringstream os;
    auto cols = column_names(r.bases);
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto &rec : r.records) {
        os << rec.d << ',' << rec.n << ',' << to_string(rec.kind) << ',' << opt_str(rec.h);
        for (const auto &v : rec.per_base)
            os << ',' << opt_str(v.digits);
        for (const auto &v : rec.per_base)
            os << ',' << opt_str(v.floor);
        for (const auto &v : rec.per_base)
            os << ',' << opt_str(v.interval);
        for (auto s : rec.checks)
            os << ',' << to_string(s);
        os << ',' << (rec.pass() ? "true" : "false") << ',' << csv_quote(rec.error) << '\n';
    }
    return os.str();
}

verification_report parse_csv(std::string_view text) {
    auto rows = csv_rows(text);
    if (rows.empty())
        throw error(errc::invalid_argument, "empty CSV report");
    const auto &header = rows.front();
    verification_report r{0, 0, {}, {}, {}};
    const std::string prefix = "h_digits_B";
    for (const auto &col : header)
        if (col.starts_with(prefix))
            r.bases.push_back(parse_int(std::string_view(col).substr(prefix.size())));
    if (header != column_names(r.bases))
        throw error(errc::invalid_argument, "unexpected CSV header");
    std::size_t nb = r.bases.size();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto &row = rows[i];
        if (row.size() != header.size())
            throw error(errc::invalid_argument, "CSV row " + std::to_string(i) + " has " +
                                                    std::to_string(row.size()) + " fields");
        verification_record rec{parse_int(row[0]), parse_int(row[1]), parse_case(row[2]),
                                parse_opt(row[3]), {}, {}, {}};
        for (std::size_t j = 0; j < nb; ++j)
            rec.per_base.push_back({r.bases[j], parse_opt(row[4 + j]), parse_opt(row[4 + nb + j]),
                                    parse_opt(row[4 + 2 * nb + j])});
        std::size_t off = 4 + 3 * nb;
        for (std::size_t k = 0; k < check_names.size(); ++k)
            rec.checks[k] = parse_state(row[off + k]);
        rec.error = row[off + check_names.size() + 1];
        r.records.push_back(std::move(rec));
    }
    finish_parsed(r);
    return r;
}

// --- json -----------------------------------------------------------------

namespace {

nlohmann::ordered_json opt_json(const std::optional<integer> &v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::optional<integer> json_opt(const nlohmann::ordered_json &j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<integer>();
}

} // namespace

std::string to_json(const verification_report &r) {
    using json = nlohmann::ordered_json;
    json records = json::array();
    for (const auto &rec : r.records) {
        json j;
        j["D"] = rec.d;
        j["N"] = rec.n;
        j["case"] = std::string(to_string(rec.kind));
        j["h_dirichlet"] = opt_json(rec.h);
        for (const auto &v : rec.per_base)
            j["h_digits_B" + std::to_string(v.base)] = opt_json(v.digits);
        for (const auto &v : rec.per_base)
            j["h_floor_B" + std::to_string(v.base)] = opt_json(v.floor);
        for (const auto &v : rec.per_base)
            j["h_interval_B" + std::to_string(v.base)] = opt_json(v.interval);
        for (std::size_t k = 0; k < check_names.size(); ++k)
            j[std::string(check_names[k])] = std::string(to_string(rec.checks[k]));
        j["pass"] = rec.pass();
        j["error"] = rec.error;
        records.push_back(std::move(j));
    }
    const auto &s = r.summary;
    json summary{{"total", s.total},
                 {"passed", s.passed},
                 {"failed", s.failed},
                 {"first_failure", opt_json(s.first_failure)},
                 {"elapsed_ms", s.elapsed_ms},
                 {"pass", s.pass}};
    json out{{"range", {{"from", r.from}, {"to", r.to}}},
             {"bases", r.bases},
             {"records", std::move(records)},
             {"summary", std::move(summary)}};
    return out.dump(2) + "\n";
}

verification_report parse_json(std::string_view text) {
    using json = nlohmann::ordered_json;
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception &ex) {
        throw error(errc::invalid_argument, std::string("bad JSON report: ") + ex.what());
    }
    verification_report r{in.at("range").at("from").get<integer>(),
                          in.at("range").at("to").get<integer>(),
                          in.at("bases").get<std::vector<integer>>(),
                          {},
                          {}};
    for (const auto &j : in.at("records")) {
        verification_record rec{j.at("D").get<integer>(), j.at("N").get<integer>(),
                                parse_case(j.at("case").get<std::string>()),
                                json_opt(j.at("h_dirichlet")), {}, {}, {}};
        for (integer b : r.bases) {
            auto s = std::to_string(b);
            rec.per_base.push_back({b, json_opt(j.at("h_digits_B" + s)),
                                    json_opt(j.at("h_floor_B" + s)),
                                    json_opt(j.at("h_interval_B" + s))});
        }
        for (std::size_t k = 0; k < check_names.size(); ++k)
            rec.checks[k] = parse_state(j.at(std::string(check_names[k])).get<std::string>());
        rec.error = j.at("error").get<std::string>();
        r.records.push_back(std::move(rec));
    }
    r.summary = summarize(r.records);
    r.summary.elapsed_ms = in.at("summary").at("elapsed_ms").get<double>();
    return r;
}

} // namespace hquad
