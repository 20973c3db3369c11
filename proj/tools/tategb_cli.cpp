#include "tategb/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kDomainError = 1;
constexpr int kParseError = 2;

int execute(const std::string& command, const std::string& path, const tategb::RunOptions& opts) {
    nlohmann::json doc;
    try {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            return kParseError;
        }
        doc = nlohmann::json::parse(in);
        const auto problem = tategb::parse_problem(doc);
        std::cout << tategb::run(command, problem, opts).dump(2) << '\n';
        return 0;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const tategb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local and universal analytic Gröbner bases over Q with a p-adic valuation"};
    app.require_subcommand(1);

    std::string cap_text, tie_text;
    tategb::RunOptions opts;
    app.add_option("--cap", cap_text, "Valuation cap for weak normal forms (rational, default 50)");
    app.add_option("--tie-break", tie_text, "Monomial order used to break valuation ties")
        ->check(CLI::IsMember({"grevlex", "lex", "grlex"}));
    app.add_option("--jobs", opts.jobs, "Worker threads for vertex checks and fan traversal")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opts.seed, "Traversal shuffle seed for fan and tropical");
    app.add_flag("--emit-certificates", opts.emit_certificates, "Include LP, vertex and multiplier certificates");

    struct Command {
        const char* name;
        const char* help;
    };
    const Command commands[] = {
        {"gb", "Local Gröbner basis at log_radii"},
        {"uagb", "Universal analytic Gröbner basis"},
        {"test-uagb", "Decide whether the generators are already universal"},
        {"fan", "Maximal cones of the Gröbner fan (homogeneous input)"},
        {"tropical", "Monomial-free cones of the fan (homogeneous input)"},
        {"wnf", "Weak normal form over a polyhedral domain"},
        {"terms-p", "Candidate leading terms of a principal ideal over a polyhedral domain"},
    };
    std::string file;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("file", file, "Problem file (JSON)")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kParseError;
    }

    try {
        if (!cap_text.empty()) opts.cap = tategb::parse_rational(cap_text);
        if (!tie_text.empty()) opts.tie = tategb::parse_tie_break(tie_text);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    }
    return execute(app.get_subcommands().front()->get_name(), file, opts);
}
