// g1cc: cosmetic-crossing obstructions for genus-one knots.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "g1cc/catalog.hpp"

namespace {

// Renders, prints, and maps per-record failures to the exit code.
// UNRESOLVED verdicts are valid answers and do not fail the run.
int report(const g1cc::AnalysisResult& result, bool json) {
    std::cout << g1cc::render(result,
                              json ? g1cc::RenderFormat::Json : g1cc::RenderFormat::Text);
    return result.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cosmetic-crossing obstructions for genus-one knots"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable JSON report");

    auto* verify = app.add_subcommand(
        "verify-table1", "analyze the built-in table of genus-one knots with <= 12 crossings");

    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze knot records from a catalog file");
    analyze_cmd->add_option("path", path, "catalog file, or '-' for stdin")->required();

    long long p = 0, q = 0, r = 0;
    auto* pretzel_cmd =
        app.add_subcommand("pretzel", "analyze the pretzel knot P(p,q,r) with p, q, r odd");
    pretzel_cmd->add_option("p", p)->required();
    pretzel_cmd->add_option("q", q)->required();
    pretzel_cmd->add_option("r", r)->required();

    std::string clasp;
    long long twists = 0;
    auto* whitehead_cmd =
        app.add_subcommand("whitehead", "analyze the n-twisted Whitehead double D+(n) or D-(n)");
    whitehead_cmd->add_option("clasp", clasp, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));
    whitehead_cmd->add_option("n", twists, "number of full twists")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return report(g1cc::analyze(g1cc::builtin_table1()), json);

        if (analyze_cmd->parsed()) {
            std::vector<g1cc::KnotRecord> records;
            try {
                if (path == "-") {
                    records = g1cc::parse_catalog(std::cin);
                } else {
                    std::ifstream in(path);
                    if (!in) {
                        std::cerr << "error: cannot open '" << path << "'\n";
                        return 1;
                    }
                    records = g1cc::parse_catalog(in);
                }
            } catch (const g1cc::ParseError& e) {
                std::cerr << "error: " << (path == "-" ? "<stdin>" : path) << ": " << e.what()
                          << "\n";
                return 1;
            }
            return report(g1cc::analyze(records), json);
        }

        if (pretzel_cmd->parsed()) {
            g1cc::KnotRecord rec;
            std::ostringstream name;
            name << "P(" << p << "," << q << "," << r << ")";
            rec.name = name.str();
            rec.source = g1cc::PretzelParams(p, q, r);
            return report(g1cc::analyze({rec}), json);
        }

        g1cc::KnotRecord rec;
        rec.name = "D" + clasp + "(" + std::to_string(twists) + ")";
        rec.source = g1cc::WhiteheadParams{
            clasp == "+" ? g1cc::Clasp::Positive : g1cc::Clasp::Negative, twists};
        return report(g1cc::analyze({rec}), json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
