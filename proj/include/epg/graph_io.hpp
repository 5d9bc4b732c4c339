#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "epg/graph.hpp"

namespace epg {

/// Line-oriented graph document:
///
///     epg-graph 1
///     vertices <n>
///     label <i> <text>      (optional; either every vertex or none)
///     edge <i> <j>          (i < j, strictly increasing order)
///
/// Lines starting with '#' and blank lines are ignored.
struct GraphDocument {
    static constexpr int kFormatVersion = 1;

    int format_version = kFormatVersion;
    std::size_t vertex_count = 0;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    static GraphDocument from_graph(const Graph& graph, std::vector<std::string> labels = {});
    Graph to_graph() const;

    bool operator==(const GraphDocument&) const = default;
};

class DocumentError : public std::runtime_error {
public:
    DocumentError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

GraphDocument parse_document(const std::string& text);
GraphDocument read_document(const std::filesystem::path& path);

/// `comments` are emitted as leading '#' lines.
std::string format_document(const GraphDocument& doc, std::span<const std::string> comments = {});

/// DOT text; edges listed in `dotted` are drawn with style=dotted.
std::string format_dot(const Graph& graph, std::span<const std::string> labels, std::span<const Edge> dotted = {},
                       const std::string& name = "G");

}  // namespace epg
