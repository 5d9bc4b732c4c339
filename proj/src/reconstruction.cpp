#include "epg/reconstruction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace epg {

std::string_view to_string(InputClass c) {
    switch (c) {
        case InputClass::complete: return "complete";
        case InputClass::cyclic_non_prime_power: return "cyclic-non-prime-power";
        case InputClass::non_cyclic: return "non-cyclic";
    }
    return "?";
}

InputClass classify_input(const Graph& graph) {
    if (is_complete(graph)) return InputClass::complete;
    if (universal_vertices(graph).size() > 2) return InputClass::cyclic_non_prime_power;
    return InputClass::non_cyclic;
}

std::optional<Vertex> find_witness(const Graph& graph, const TwinCounts& counts, Vertex a, Vertex b) {
    if (a >= graph.vertex_count() || b >= graph.vertex_count()) throw std::out_of_range("vertex out of range");
    if (a == b) throw std::invalid_argument("decide_pair: vertices must be distinct");
    if (graph.adjacent(a, b)) throw std::invalid_argument("decide_pair: vertices " + std::to_string(a) + " and " + std::to_string(b) + " are already adjacent");

    const std::size_t na = counts[a], nb = counts[b];
    const bool equal = na == nb;
    const std::size_t bound = std::max(na, nb);

    const auto ra = graph.neighbors(a), rb = graph.neighbors(b);
    auto i = ra.begin(), j = rb.begin();
    while (i != ra.end() && j != rb.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            const std::size_t nc = counts[*i];
            if (equal ? nc > bound : nc >= bound) return *i;
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

bool decide_pair(const Graph& graph, const TwinCounts& counts, Vertex a, Vertex b) {
    return find_witness(graph, counts, a, b).has_value();
}

namespace {

void added_from(const Graph& graph, const TwinCounts& counts, Vertex a, std::vector<AddedEdge>& out) {
    const auto na = graph.neighbors(a);
    auto next = std::upper_bound(na.begin(), na.end(), a);
    for (Vertex b = a + 1; b < graph.vertex_count(); ++b) {
        if (next != na.end() && *next == b) {
            ++next;
            continue;
        }
        if (auto w = find_witness(graph, counts, a, b)) out.push_back({a, b, *w});
    }
}

// Handles the two cyclic classes; returns false when the pairwise rule is
// needed.
bool finish_cyclic_cases(const Graph& power, ReconstructionReport& report) {
    report.input_class = classify_input(power);
    report.universal_count = universal_vertices(power).size();
    if (report.input_class == InputClass::complete) {
        report.output = power;
        return true;
    }
    if (report.input_class == InputClass::cyclic_non_prime_power) {
        const std::size_t n = power.vertex_count();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (!power.adjacent(a, b)) report.added_edges.push_back({a, b, std::nullopt});
        report.output = Graph::complete(n);
        return true;
    }
    return false;
}

Graph merge_edges(const Graph& power, const std::vector<AddedEdge>& added) {
    std::vector<Edge> edges = power.edges();
    for (const auto& e : added) edges.emplace_back(e.a, e.b);
    return Graph::from_edges(power.vertex_count(), edges);
}

}  // namespace

ReconstructionReport reconstruct_enhanced(const Graph& power) {
    ReconstructionReport report;
    if (finish_cyclic_cases(power, report)) return report;

    report.counts = twin_counts(power);
    const auto n = static_cast<std::ptrdiff_t>(power.vertex_count());
    std::vector<std::vector<AddedEdge>> per_vertex(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t a = 0; a < n; ++a) added_from(power, report.counts, static_cast<Vertex>(a), per_vertex[a]);

    for (auto& list : per_vertex) report.added_edges.insert(report.added_edges.end(), list.begin(), list.end());
    report.output = merge_edges(power, report.added_edges);
    return report;
}

namespace reference {
ReconstructionReport reconstruct_enhanced(const Graph& power) {
    ReconstructionReport report;
    if (finish_cyclic_cases(power, report)) return report;

    report.counts = reference::twin_counts(power);
    for (Vertex a = 0; a < power.vertex_count(); ++a)
        for (Vertex b = a + 1; b < power.vertex_count(); ++b)
            if (!power.adjacent(a, b) && decide_pair(power, report.counts, a, b))
                report.added_edges.push_back({a, b, find_witness(power, report.counts, a, b)});
    report.output = merge_edges(power, report.added_edges);
    return report;
}
}  // namespace reference

DifferenceGraph difference_graph(std::size_t vertex_count, std::span<const Edge> added) {
    std::vector<char> touched(vertex_count, 0);
    for (auto [a, b] : added) {
        if (a >= vertex_count || b >= vertex_count) throw std::invalid_argument("difference edge out of range");
        touched[a] = touched[b] = 1;
    }
    DifferenceGraph result;
    std::vector<Vertex> renumber(vertex_count, 0);
    for (Vertex v = 0; v < vertex_count; ++v) {
        if (!touched[v]) continue;
        renumber[v] = static_cast<Vertex>(result.original.size());
        result.original.push_back(v);
    }
    std::vector<Edge> edges;
    edges.reserve(added.size());
    for (auto [a, b] : added) edges.emplace_back(renumber[a], renumber[b]);
    result.graph = Graph::from_edges(result.original.size(), edges);
    return result;
}

DifferenceGraph difference_graph_from_power(const Graph& power) {
    const auto report = reconstruct_enhanced(power);
    std::vector<Edge> edges;
    edges.reserve(report.added_edges.size());
    for (const auto& e : report.added_edges) edges.emplace_back(e.a, e.b);
    return difference_graph(power.vertex_count(), edges);
}

}  // namespace epg
