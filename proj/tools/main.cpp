#include "hquad/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char **argv) {
    using namespace hquad;
    CLI::App app{"Class numbers of imaginary quadratic fields by exact character sums"};
    app.require_subcommand(1);

    cli::classnum_options cn;
    auto *classnum = app.add_subcommand("classnum", "h(D) by every requested formula");
    classnum->add_option("-D,--discriminant", cn.d, "fundamental discriminant D < -4")
        ->required();
    classnum->add_option("-B,--base", cn.bases, "base B prime to D (repeatable)");
    classnum->add_option("--method", cn.methods, "dirichlet|digits|floor|interval|coarse|quarter|sixth");

    cli::expand_options ex;
    std::optional<integer> ex_d, ex_n;
    auto *expand = app.add_subcommand("expand", "periodic base-B expansion of x/N");
    expand->add_option("-D,--discriminant", ex_d, "discriminant (sets N = |D|)");
    expand->add_option("-N,--modulus", ex_n, "modulus N");
    expand->add_option("-B,--base", ex.base, "base")->required();
    expand->add_option("-x,--numerator", ex.x, "numerator x prime to N")->required();

    integer ek_d = 0, ek_b = 0;
    auto *ek = app.add_subcommand("ek", "signed character counts E_k(B)");
    ek->add_option("-D,--discriminant", ek_d)->required();
    ek->add_option("-B,--base", ek_b)->required();

    integer gp = 0;
    std::optional<integer> gb;
    auto *girstmair = app.add_subcommand("girstmair", "h(-p) from the digits of 1/p");
    girstmair->add_option("p", gp, "prime p = 3 (mod 4), p > 3")->required();
    girstmair->add_option("-B,--base", gb, "primitive root mod p (default: least)");

    cli::verify_options vo;
    std::string format = "text";
    auto *verify = app.add_subcommand("verify", "sweep every fundamental D in a range");
    verify->add_option("--from", vo.from, "lowest D")->required();
    verify->add_option("--to", vo.to, "highest D (< -4)")->required();
    verify->add_option("-B,--base", vo.bases, "bases (repeatable, default 2..13)");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    verify->add_option("--jobs", vo.jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_invalid_input;
    }

    if (*classnum)
        return cli::cmd_classnum(cn, std::cout, std::cerr);
    if (*expand) {
        ex.d = ex_d;
        ex.n = ex_n;
        return cli::cmd_expand(ex, std::cout, std::cerr);
    }
    if (*ek)
        return cli::cmd_ek(ek_d, ek_b, std::cout, std::cerr);
    if (*girstmair)
        return cli::cmd_girstmair(gp, gb, std::cout, std::cerr);
    static const std::map<std::string, cli::report_format> formats{
        {"text", cli::report_format::text},
        {"csv", cli::report_format::csv},
        {"json", cli::report_format::json}};
    vo.format = formats.at(format);
    return cli::cmd_verify(vo, std::cout, std::cerr);
}
