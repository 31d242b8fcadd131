#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kappatree/decomposition.hpp"
#include "kappatree/io.hpp"
#include "kappatree/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDisconnected = 2;
constexpr int kInvariant = 3;

struct Options {
    std::string input;
    std::string input_format = "auto";
    std::string format = "json";
    bool quiet = false;
    bool dot = false;
    bool json = false;
    std::size_t max_depth = 8;
};

kappatree::Graph load(const Options& opt) {
    std::string text;
    if (opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(opt.input);
        if (!in) {
            throw std::runtime_error("cannot open " + opt.input);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto format = kappatree::InputFormat::kEdgeList;
    const bool dot_ext = opt.input.ends_with(".dot") || opt.input.ends_with(".gv");
    if (opt.input_format == "dot" || (opt.input_format == "auto" && dot_ext)) {
        format = kappatree::InputFormat::kDot;
    }
    return kappatree::parse_graph(text, format);
}

std::string summary(const kappatree::Analysis& a) {
    std::ostringstream out;
    if (a.trivial()) {
        out << "trivial: single block " << kappatree::format_set(a.graph, a.graph.vertices()) << "\n";
        return out.str();
    }
    out << "kappa " << *a.kappa << "\n";
    out << a.system.size() << " thin cuts, " << a.nested.system.size() << " selected\n";
    for (const auto& s : a.tree.separators) {
        out << "separator " << kappatree::format_set(a.graph, s) << "\n";
    }
    for (const auto& b : a.tree.blocks) {
        out << "block " << kappatree::format_set(a.graph, b.vertices) << "\n";
    }
    for (const auto& s : a.tree.slices) {
        out << "slice " << kappatree::format_set(a.graph, s.vertices) << "\n";
    }
    return out.str();
}

int run(CLI::App& app, const Options& opt) {
    using namespace kappatree;
    const Graph g = load(opt);
    if (app.got_subcommand("analyze")) {
        const Analysis a = analyze(g);
        std::cout << (opt.format == "text" ? summary(a) : analysis_json(a));
    } else if (app.got_subcommand("tree")) {
        const Analysis a = analyze(g);
        if (opt.dot || (!opt.json && opt.format == "dot")) {
            std::cout << emit_dot(a.tree);
        } else if (!opt.json && opt.format == "text") {
            std::cout << summary(a);
        } else {
            std::cout << tree_json(a);
        }
    } else if (app.got_subcommand("decompose")) {
        const DecompositionReport r = decompose_recursively(g, opt.max_depth);
        std::cout << decomposition_json(r);
        if (!opt.quiet) {
            for (const std::string& p : r.problems) {
                std::cerr << "warning: " << p << "\n";
            }
        }
        if (!r.kappa_increasing || !r.block_graphs_connected) {
            return kInvariant;
        }
    } else if (app.got_subcommand("verify")) {
        const oracle::Certificate c = oracle::certify(g);
        std::cout << certificate_json(c);
        if (!opt.quiet && !c.oracle_run) {
            std::cerr << "note: graph exceeds the oracle budget; only axioms and tree checked\n";
        }
        if (!c.passed()) {
            return kInvariant;
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure trees of thin vertex cut systems"};
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_flag("-q,--quiet", opt.quiet, "Suppress diagnostics on stderr");
    app.add_option("--input-format", opt.input_format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "dot"}));
    app.require_subcommand(0, 1);

    auto add_input = [&opt](CLI::App* sub) {
        sub->add_option("graph", opt.input, "Graph file (edge list or DOT); - for stdin")->required();
    };
    add_input(app.add_subcommand("analyze", "kappa, inseparable sets, thin cuts and nesting statistics"));
    CLI::App* tree = app.add_subcommand("tree", "Structure tree of the canonical nested system");
    add_input(tree);
    tree->add_flag("--dot", opt.dot, "Emit Graphviz DOT");
    tree->add_flag("--json", opt.json, "Emit JSON");
    CLI::App* decompose = app.add_subcommand("decompose", "Iterate the decomposition through block graphs");
    add_input(decompose);
    decompose->add_option("--max-depth", opt.max_depth, "Recursion depth limit");
    add_input(app.add_subcommand("verify", "Check axioms and compare against the brute-force oracle"));
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kInputError;
    }

    try {
        return run(app, opt);
    } catch (const kappatree::DisconnectedGraphError& e) {
        if (!opt.quiet) {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kDisconnected;
    } catch (const kappatree::InvariantViolation& e) {
        if (!opt.quiet) {
            std::cerr << "invariant violation: " << e.what() << "\n";
        }
        return kInvariant;
    } catch (const std::exception& e) {
        if (!opt.quiet) {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kInputError;
    }
}
