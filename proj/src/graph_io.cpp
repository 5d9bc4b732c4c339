#include "epg/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

namespace epg {

DocumentError::DocumentError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

GraphDocument GraphDocument::from_graph(const Graph& graph, std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != graph.vertex_count()) throw std::invalid_argument("label count must equal vertex count");
    GraphDocument doc;
    doc.vertex_count = graph.vertex_count();
    doc.labels = std::move(labels);
    doc.edges = graph.edges();
    return doc;
}

Graph GraphDocument::to_graph() const { return Graph::from_edges(vertex_count, edges); }

namespace {

std::size_t parse_index(const std::string& token, std::size_t line) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw DocumentError(line, "expected a non-negative integer, got '" + token + "'");
    try {
        return std::stoull(token);
    } catch (const std::exception&) {
        throw DocumentError(line, "integer out of range: '" + token + "'");
    }
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false, have_count = false;
    GraphDocument doc;
    std::vector<char> labelled;
    std::size_t label_total = 0;
    std::size_t last_label_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;

        std::istringstream words(line.substr(start));
        std::string keyword;
        words >> keyword;

        if (!have_header) {
            std::string version;
            words >> version;
            if (keyword != "epg-graph") throw DocumentError(line_no, "expected 'epg-graph <version>' header");
            doc.format_version = static_cast<int>(parse_index(version, line_no));
            if (doc.format_version != GraphDocument::kFormatVersion)
                throw DocumentError(line_no, "unsupported format version " + version);
            have_header = true;
            continue;
        }
        if (!have_count) {
            std::string count;
            words >> count;
            if (keyword != "vertices") throw DocumentError(line_no, "expected 'vertices <n>'");
            doc.vertex_count = parse_index(count, line_no);
            labelled.assign(doc.vertex_count, 0);
            have_count = true;
            continue;
        }

        if (keyword == "label") {
            if (!doc.edges.empty()) throw DocumentError(line_no, "labels must precede edges");
            std::string index;
            words >> index;
            const std::size_t i = parse_index(index, line_no);
            if (i >= doc.vertex_count) throw DocumentError(line_no, "label index " + index + " out of range");
            if (labelled[i]) throw DocumentError(line_no, "duplicate label for vertex " + index);
            std::string rest;
            std::getline(words, rest);
            const auto first = rest.find_first_not_of(" \t");
            if (first == std::string::npos) throw DocumentError(line_no, "empty label");
            if (doc.labels.empty()) doc.labels.resize(doc.vertex_count);
            doc.labels[i] = rest.substr(first);
            labelled[i] = 1;
            ++label_total;
            last_label_line = line_no;
        } else if (keyword == "edge") {
            std::string si, sj, extra;
            words >> si >> sj;
            if (words >> extra) throw DocumentError(line_no, "trailing text after edge");
            const std::size_t i = parse_index(si, line_no), j = parse_index(sj, line_no);
            if (i >= doc.vertex_count || j >= doc.vertex_count) throw DocumentError(line_no, "edge endpoint out of range");
            if (i >= j) throw DocumentError(line_no, "edge endpoints must satisfy i < j");
            const Edge e{static_cast<Vertex>(i), static_cast<Vertex>(j)};
            if (!doc.edges.empty() && !(doc.edges.back() < e))
                throw DocumentError(line_no, "edges must be sorted and unique");
            doc.edges.push_back(e);
        } else {
            throw DocumentError(line_no, "unknown keyword '" + keyword + "'");
        }
    }
    if (!have_header) throw DocumentError(line_no, "missing 'epg-graph' header");
    if (!have_count) throw DocumentError(line_no, "missing 'vertices' line");
    if (label_total != 0 && label_total != doc.vertex_count)
        throw DocumentError(last_label_line, "labels given for " + std::to_string(label_total) + " of " +
                                                 std::to_string(doc.vertex_count) + " vertices");
    return doc;
}

GraphDocument read_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError(0, "cannot open '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string format_document(const GraphDocument& doc, std::span<const std::string> comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "epg-graph " << doc.format_version << '\n';
    out << "vertices " << doc.vertex_count << '\n';
    for (std::size_t i = 0; i < doc.labels.size(); ++i) out << "label " << i << ' ' << doc.labels[i] << '\n';
    for (auto [i, j] : doc.edges) out << "edge " << i << ' ' << j << '\n';
    return out.str();
}

namespace {
std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}
}  // namespace

std::string format_dot(const Graph& graph, std::span<const std::string> labels, std::span<const Edge> dotted, const std::string& name) {
    std::vector<Edge> marked(dotted.begin(), dotted.end());
    for (auto& [a, b] : marked)
        if (a > b) std::swap(a, b);
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

    std::vector<Edge> edges;
    const auto solid = graph.edges();
    std::set_union(solid.begin(), solid.end(), marked.begin(), marked.end(), std::back_inserter(edges));

    std::ostringstream out;
    out << "graph " << dot_quote(name) << " {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        out << "  " << v;
        if (v < labels.size()) out << " [label=" << dot_quote(labels[v]) << "]";
        out << ";\n";
    }
    for (const auto& e : edges) {
        out << "  " << e.first << " -- " << e.second;
        if (std::binary_search(marked.begin(), marked.end(), e)) out << " [style=dotted]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace epg
