// Command-line front end: group summaries, graph export, reconstruction and
// the catalog verification run.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "epg/catalog.hpp"
#include "epg/graph_io.hpp"
#include "epg/reconstruction.hpp"
#include "epg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "doc";
    bool dot = false;
    std::string out;

    bool wants_dot() const { return dot || format == "dot"; }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"doc", "dot"}));
    cmd->add_flag("--dot", opts.dot, "Shorthand for --format dot");
    cmd->add_option("--out", opts.out, "Output path (default: standard output)");
}

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + opts.out + "'");
    file << text;
    if (!file) throw UsageError("failed writing '" + opts.out + "'");
}

epg::FiniteGroup load_group(const std::vector<std::string>& spec_tokens, const std::string& table) {
    if (!table.empty()) {
        if (!spec_tokens.empty()) throw UsageError("give either a group specification or --table, not both");
        return epg::read_cayley_csv(table);
    }
    if (spec_tokens.empty()) throw UsageError("missing group specification (e.g. 'cyclic 6')");
    return epg::make_group(epg::parse_group_spec(spec_tokens));
}

std::string group_title(const std::vector<std::string>& spec_tokens, const std::string& table) {
    if (!table.empty()) return "table:" + table;
    return epg::parse_group_spec(spec_tokens).name();
}

int cmd_gen_group(const std::vector<std::string>& spec, const std::string& table) {
    const auto g = load_group(spec, table);
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t d : g.element_orders()) ++histogram[d];
    const auto poset = epg::cyclic_subgroup_poset(g);

    std::cout << "group " << group_title(spec, table) << "\n";
    std::cout << "order " << g.order() << "\n";
    std::cout << "cyclic " << (epg::is_cyclic(g) ? "yes" : "no") << "\n";
    std::cout << "element-orders";
    for (auto [d, c] : histogram) std::cout << ' ' << d << ':' << c;
    std::cout << "\n";
    std::cout << "involutions " << (histogram.count(2) ? histogram[2] : 0) << "\n";
    std::cout << "generalized-quaternion " << (epg::is_generalized_quaternion(g) ? "yes" : "no") << "\n";
    std::cout << "cyclic-subgroups " << poset.size() << "\n";
    return kExitOk;
}

int cmd_graph(bool enhanced, const std::vector<std::string>& spec, const std::string& table, const OutputOptions& opts,
              bool mark_difference) {
    const auto g = load_group(spec, table);
    const epg::Graph power = epg::power_graph(g);
    const epg::Graph graph = enhanced ? epg::enhanced_power_graph(g) : power;
    const std::string title = (enhanced ? "enhanced power graph of " : "power graph of ") + group_title(spec, table);

    if (opts.wants_dot()) {
        std::vector<epg::Edge> dotted;
        if (enhanced && mark_difference) dotted = epg::edge_difference(graph, power);
        emit(opts, epg::format_dot(graph, g.labels(), dotted, title));
    } else {
        const std::vector<std::string> comments{title};
        emit(opts, epg::format_document(epg::GraphDocument::from_graph(graph, g.labels()), comments));
    }
    return kExitOk;
}

std::vector<std::string> report_lines(const epg::ReconstructionReport& report, const epg::GraphDocument& input) {
    auto name = [&](epg::Vertex v) { return input.labels.empty() ? std::to_string(v) : input.labels[v]; };
    std::vector<std::string> lines;
    lines.push_back("reconstruction report");
    lines.push_back("input-class " + std::string(epg::to_string(report.input_class)));
    lines.push_back("universal-vertices " + std::to_string(report.universal_count));
    lines.push_back("added-edges " + std::to_string(report.added_edges.size()));
    if (!report.counts.counts.empty()) {
        std::string counts = "twin-counts";
        for (std::size_t c : report.counts.counts) counts += ' ' + std::to_string(c);
        lines.push_back(counts);
    }
    for (const auto& e : report.added_edges) {
        std::string line = "added " + std::to_string(e.a) + ' ' + std::to_string(e.b);
        if (e.witness) line += " witness " + std::to_string(*e.witness);
        if (!input.labels.empty()) {
            line += " (" + name(e.a) + " ~ " + name(e.b);
            if (e.witness) line += " via " + name(*e.witness);
            line += ")";
        }
        lines.push_back(line);
    }
    lines.push_back("note: input is assumed to be the power graph of a finite group");
    return lines;
}

int cmd_reconstruct(const std::string& input_path, const OutputOptions& opts) {
    const auto input = epg::read_document(input_path);
    const auto report = epg::reconstruct_enhanced(input.to_graph());
    if (opts.wants_dot()) {
        std::vector<epg::Edge> dotted;
        for (const auto& e : report.added_edges) dotted.emplace_back(e.a, e.b);
        emit(opts, epg::format_dot(report.output, input.labels, dotted, "reconstructed enhanced power graph"));
    } else {
        emit(opts, epg::format_document(epg::GraphDocument::from_graph(report.output, input.labels), report_lines(report, input)));
    }
    return kExitOk;
}

int cmd_diff(const std::string& input_path, const OutputOptions& opts) {
    const auto input = epg::read_document(input_path);
    const auto diff = epg::difference_graph_from_power(input.to_graph());
    std::vector<std::string> labels;
    for (epg::Vertex v : diff.original) labels.push_back(input.labels.empty() ? std::to_string(v) : input.labels[v]);
    if (opts.wants_dot()) {
        emit(opts, epg::format_dot(diff.graph, labels, {}, "difference graph"));
    } else {
        std::string origin = "original-vertices";
        for (epg::Vertex v : diff.original) origin += ' ' + std::to_string(v);
        const std::vector<std::string> comments{"difference graph", origin};
        emit(opts, epg::format_document(epg::GraphDocument::from_graph(diff.graph, labels), comments));
    }
    return kExitOk;
}

int cmd_twins(const std::string& input_path) {
    const auto input = epg::read_document(input_path);
    const auto counts = epg::twin_counts(input.to_graph());
    for (std::size_t v = 0; v < counts.size(); ++v) {
        std::cout << v;
        if (!input.labels.empty()) std::cout << ' ' << input.labels[v];
        std::cout << ' ' << counts.counts[v] << "\n";
    }
    return kExitOk;
}

int cmd_verify(std::size_t max_order, std::size_t hard_cap, const std::vector<std::string>& families) {
    if (max_order > hard_cap)
        throw UsageError("--max-order " + std::to_string(max_order) + " exceeds the cap of " + std::to_string(hard_cap));
    const auto catalog = epg::default_catalog(max_order, families);
    const auto results = epg::verify_catalog(catalog);

    std::cout << std::left << std::setw(6) << "status" << ' ' << std::setw(10) << "group" << ' ' << std::setw(6) << "order" << ' '
              << std::setw(24) << "class" << ' ' << std::setw(4) << "|U|" << ' ' << std::setw(4) << "N_e" << ' ' << std::setw(10)
              << "coverage" << ' ' << std::setw(6) << "added" << ' ' << "checks\n";
    std::size_t failed = 0;
    const epg::CheckResult* first = nullptr;
    const epg::GroupVerification* first_group = nullptr;
    for (const auto& r : results) {
        const bool ok = r.passed();
        if (!ok) {
            ++failed;
            if (!first) {
                first = r.first_failure();
                first_group = &r;
            }
        }
        std::ostringstream coverage;
        coverage << r.formula_covered << '/' << r.order;
        std::cout << std::setw(6) << (ok ? "PASS" : "FAIL") << ' ' << std::setw(10) << r.name << ' ' << std::setw(6) << r.order << ' '
                  << std::setw(24) << r.input_class << ' ' << std::setw(4) << r.universal_count << ' ' << std::setw(4)
                  << r.identity_twin_count << ' ' << std::setw(10) << coverage.str() << ' ' << std::setw(6) << r.added_edges << ' '
                  << r.checks.size() << "\n";
    }
    std::cout << "summary " << results.size() - failed << "/" << results.size() << " groups passed\n";
    if (first) {
        std::cout << "first failure: " << first_group->name << " check " << first->name << ": " << first->detail << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Power graphs, enhanced power graphs and their reconstruction"};
    app.require_subcommand(1);

    std::vector<std::string> spec;
    std::string table;
    OutputOptions out;
    bool mark_difference = false;
    std::string input;
    std::size_t max_order = 48;
    std::size_t hard_cap = 256;
    std::vector<std::string> families;

    auto* gen = app.add_subcommand("gen-group", "Summarize a group");
    gen->add_option("spec", spec, "Group specification, e.g. 'cyclic 6', 'q 3', 'cyclic 2 x cyclic 6'");
    gen->add_option("--table", table, "Cayley table CSV");

    auto* pg = app.add_subcommand("power-graph", "Write the power graph of a group");
    pg->add_option("spec", spec, "Group specification");
    pg->add_option("--table", table, "Cayley table CSV");
    add_output_options(pg, out);

    auto* eg = app.add_subcommand("enhanced", "Write the enhanced power graph of a group");
    eg->add_option("spec", spec, "Group specification");
    eg->add_option("--table", table, "Cayley table CSV");
    eg->add_flag("--mark-diff", mark_difference, "Draw edges missing from the power graph dotted (DOT only)");
    add_output_options(eg, out);

    auto* rc = app.add_subcommand("reconstruct", "Rebuild the enhanced power graph from a power graph document");
    rc->add_option("input", input, "Power graph document")->required();
    add_output_options(rc, out);

    auto* df = app.add_subcommand("diff", "Difference graph from a power graph document");
    df->add_option("input", input, "Power graph document")->required();
    add_output_options(df, out);

    auto* tw = app.add_subcommand("twins", "Print closed-twin counts of a graph document");
    tw->add_option("input", input, "Graph document")->required();

    auto* vf = app.add_subcommand("verify", "Check every invariant on the group catalog");
    vf->add_option("--max-order", max_order, "Largest group order to include");
    vf->add_option("--hard-cap", hard_cap, "Refuse --max-order above this");
    vf->add_option("--family", families, "Restrict to a family (cyclic, dihedral, q, symmetric, product); repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen_group(spec, table);
        if (*pg) return cmd_graph(false, spec, table, out, false);
        if (*eg) return cmd_graph(true, spec, table, out, mark_difference);
        if (*rc) return cmd_reconstruct(input, out);
        if (*df) return cmd_diff(input, out);
        if (*tw) return cmd_twins(input);
        if (*vf) return cmd_verify(max_order, hard_cap, families);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
