#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "unigf/cli.hpp"

using namespace unigf;
using namespace unigf::cli;

int main(int argc, char** argv) {
    CLI::App app{"Unified degenerate-exponential polynomial family: compute, enumerate, verify"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "text or structured (JSON envelope)")
        ->check(CLI::IsMember({"text", "structured", "json"}));
    app.add_flag("--timing", timing, "report elapsed milliseconds");

    // poly
    auto* poly = app.add_subcommand("poly", "print U_n, optionally with parameters bound");
    long poly_n = 0;
    std::string poly_bind;
    poly->add_option("n", poly_n, "index n >= 1")->required();
    poly->add_option("--bind", poly_bind, "bindings, e.g. b=1,m=1/2");

    // triangle
    auto* tri = app.add_subcommand("triangle", "coefficient triangle of a special case or explicit bindings");
    TriangleRequest tri_req;
    int tri_case = 0;
    std::string tri_bind;
    tri->add_option("n_max", tri_req.n_max, "rows 1..n_max")->required();
    tri->add_option("--case", tri_case, "special case id 1..13");
    tri->add_option("--bind", tri_bind, "bindings for the parameters left free");
    tri->add_flag("--allow-rational", tri_req.allow_rational, "accept non-integer entries");

    // enumerate
    auto* en = app.add_subcommand("enumerate", "list the partitions of [n] into k ordered blocks of ordered elements");
    EnumerateRequest en_req;
    en->add_option("n", en_req.n)->required();
    en->add_option("k", en_req.k)->required();
    en->add_flag("--stats,!--no-stats", en_req.with_stats, "append rlb, nsb, rle, nse (default on)");
    en->add_flag("--force", en_req.force, "lift the n <= 8 guard");

    // verify
    auto* ver = app.add_subcommand("verify", "check the identities up to n_max; nonzero exit on any failure");
    VerifyRequest ver_req;
    std::string suite = "all";
    std::string fault;
    ver->add_option("n_max", ver_req.n_max)->required();
    ver->add_option("suite", suite, "all, recurrences, lemmas, ode or enumeration")
        ->check(CLI::IsMember({"all", "recurrences", "lemmas", "ode", "enumeration"}));
    ver->add_option("--inject-fault", fault)->group("");

    // oeis-check
    auto* oeis = app.add_subcommand("oeis-check", "compare a special case against an OEIS b-file");
    OeisRequest oeis_req;
    std::string oeis_path;
    std::string oeis_mode;
    oeis->add_option("case", oeis_req.case_id)->required();
    oeis->add_option("bfile", oeis_path)->required();
    oeis->add_option("n_max", oeis_req.n_max)->required();
    oeis->add_option("--mode", oeis_mode, "triangle-by-rows or row-sums (default: the case's recorded mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    CommandOutput result;
    try {
        const OutputOptions opts{parse_format(format), timing};
        if (*poly) {
            result = cmd_poly(poly_n, poly_bind.empty() ? Bindings{} : parse_bindings(poly_bind), opts);
        } else if (*tri) {
            if (tri->count("--case")) tri_req.case_id = tri_case;
            if (!tri_bind.empty()) tri_req.bindings = parse_bindings(tri_bind);
            result = cmd_triangle(tri_req, opts);
        } else if (*en) {
            result = cmd_enumerate(en_req, opts);
        } else if (*ver) {
            ver_req.suite = parse_suite(suite);
            if (!fault.empty()) ver_req.inject_fault = fault;
            result = cmd_verify(ver_req, opts);
        } else if (*oeis) {
            oeis_req.bfile = oeis_path;
            if (!oeis_mode.empty()) oeis_req.mode = parse_compare_mode(oeis_mode);
            result = cmd_oeis_check(oeis_req, opts);
        }
    } catch (const std::invalid_argument& e) {
        result = {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }

    std::cout << result.out << std::flush;
    std::cerr << result.err << std::flush;
    return result.exit_code;
}
