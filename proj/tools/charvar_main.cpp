#include "charvar/format.hpp"
#include "charvar/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace charvar;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

int genus_cap() {
    const char* env = std::getenv("CHARVAR_MAX_GENUS");
    if (!env) return 16;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 2) return 16;
    return static_cast<int>(v);
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

void print_with_newline(const std::string& s) {
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << "\n";
}

bool parse_genus_range(const std::string& text, int& lo, int& hi) {
    auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        size_t used = 0;
        lo = std::stoi(text.substr(0, pos), &used);
        if (used != pos) return false;
        std::string tail = text.substr(pos + 2);
        hi = std::stoi(tail, &used);
        return used == tail.size();
    } catch (const std::exception&) {
        return false;
    }
}

struct ComputeArgs {
    std::string invariant;
    std::string group;
    std::string side;
    int genus = 0;
    int truncate = -1;
    std::string format = "text";
};

int run_compute(const ComputeArgs& args) {
    auto kind = kind_from_name(args.invariant);
    if (!kind) return usage_error("unknown invariant '" + args.invariant + "'");
    auto group = group_from_name(args.group);
    if (!group) return usage_error("unknown group '" + args.group + "'");
    auto format = format_from_name(args.format);
    if (!format) return usage_error("unknown format '" + args.format + "'");

    std::optional<Side> side;
    if (!args.side.empty()) {
        side = side_from_name(args.side);
        if (!side) return usage_error("unknown side '" + args.side + "'");
    }
    bool needs_side = *kind == InvariantKind::IE || *kind == InvariantKind::ET ||
                      *kind == InvariantKind::IEVar;
    if (needs_side && !side)
        return usage_error("--side is required for invariant '" + args.invariant + "'");

    if (args.genus < 2) return usage_error("--genus must be at least 2");
    if (args.genus > genus_cap())
        return usage_error("--genus exceeds CHARVAR_MAX_GENUS (" +
                           std::to_string(genus_cap()) + ")");

    try {
        InvariantResult result = compute_invariant(*kind, *group, side, args.genus);
        if (args.truncate >= 0)
            result.poly = truncate_total_degree(result.poly, args.truncate);
        print_with_newline(render(result, *format));
        return kExitPass;
    } catch (const UnsupportedGroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const UnsupportedKindError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}

struct VerifyArgs {
    std::string suite;
    int genus_min = -1;
    int genus_max = -1;
};

int run_verify(const VerifyArgs& args) {
    std::optional<int> gmin, gmax;
    if (args.genus_min >= 0) gmin = args.genus_min;
    if (args.genus_max >= 0) gmax = args.genus_max;
    if (gmin && *gmin < 2) return usage_error("--genus-min must be at least 2");
    if (gmax && *gmax > genus_cap())
        return usage_error("--genus-max exceeds CHARVAR_MAX_GENUS (" +
                           std::to_string(genus_cap()) + ")");
    if (gmin && gmax && *gmin > *gmax)
        return usage_error("--genus-min exceeds --genus-max");

    auto checks = run_suite(args.suite, gmin, gmax);
    if (!checks) return usage_error("unknown suite '" + args.suite + "'");

    int failed = 0;
    for (const CheckResult& c : *checks) {
        if (c.pass) {
            std::cout << "PASS " << c.name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
        }
    }
    std::cout << checks->size() - failed << "/" << checks->size()
              << " checks passed\n";
    return failed == 0 ? kExitPass : kExitVerifyFail;
}

struct TableArgs {
    std::string which;
    bool paper = false;
    std::string genus_range;
    std::string format = "text";
};

int run_table(const TableArgs& args) {
    if (args.paper == !args.genus_range.empty())
        return usage_error("exactly one of --paper or --genus-range is required");
    int lo = 2, hi = 5;
    if (!args.genus_range.empty()) {
        if (!parse_genus_range(args.genus_range, lo, hi))
            return usage_error("--genus-range must look like A..B");
        if (lo < 2) return usage_error("genus range must start at 2 or above");
        if (lo > hi) return usage_error("empty genus range");
        if (hi > genus_cap())
            return usage_error("genus range exceeds CHARVAR_MAX_GENUS (" +
                               std::to_string(genus_cap()) + ")");
    }
    auto format = format_from_name(args.format);
    if (!format || (*format != OutputFormat::Text && *format != OutputFormat::Latex))
        return usage_error("table formats are 'text' and 'latex'");
    bool latex = *format == OutputFormat::Latex;

    for (int g = lo; g <= hi; ++g) {
        std::string body;
        bool truncated = false;
        LaurentPoly poly;
        if (args.which == "ie-sl2") {
            poly = truncate_total_degree(ie_betti(Group::SL2, g), 3 * g - 3);
            truncated = true;
        } else if (args.which == "ip-sl2") {
            poly = ip(Group::SL2, g);
        } else if (args.which == "ip-minus-p") {
            poly = ip(Group::SL2, g) - p_ordinary(g);
        } else if (args.which == "euler") {
            poly = P_const(Rational(euler_char(Group::SL2, g)));
        } else {
            return usage_error("unknown table '" + args.which + "'");
        }
        body = latex ? to_latex(poly) : to_string(poly);
        if (truncated) body += latex ? " + \\cdots" : " + ...";
        if (latex)
            std::cout << "g=" << g << ": & " << body << " \\\\\n";
        else
            std::cout << "g=" << g << ": " << body << "\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of rank-2 character varieties and Higgs moduli"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    CLI::App* compute = app.add_subcommand(
        "compute", "Compute one invariant for a group, side and genus");
    compute->add_option("--invariant", cargs.invariant,
                        "One of ie, ip, p, e-t, ie-var, ip-var, euler")
        ->required();
    compute->add_option("--group", cargs.group, "One of sl2, pgl2, gl2")->required();
    compute->add_option("--side", cargs.side, "betti or dolbeault");
    compute->add_option("--genus", cargs.genus, "Curve genus, at least 2")->required();
    compute->add_option("--truncate", cargs.truncate,
                        "Drop monomials above this total degree");
    compute->add_option("--format", cargs.format, "text, json, csv or latex");

    VerifyArgs vargs;
    CLI::App* verify =
        app.add_subcommand("verify", "Run a verification suite and report PASS/FAIL");
    verify->add_option("--suite", vargs.suite,
                       "One of tables, palindromy, purity, identities, expansion, all")
        ->required();
    verify->add_option("--genus-min", vargs.genus_min, "Lower genus bound");
    verify->add_option("--genus-max", vargs.genus_max, "Upper genus bound");

    TableArgs targs;
    CLI::App* table =
        app.add_subcommand("table", "Print low-genus rows of a named family");
    table->add_option("--which", targs.which,
                      "One of ie-sl2, ip-sl2, ip-minus-p, euler")
        ->required();
    table->add_flag("--paper", targs.paper, "Reproduce the printed rows (genus 2..5)");
    table->add_option("--genus-range", targs.genus_range, "Row range, e.g. 2..8");
    table->add_option("--format", targs.format, "text or latex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (compute->parsed()) return run_compute(cargs);
    if (verify->parsed()) return run_verify(vargs);
    return run_table(targs);
}
