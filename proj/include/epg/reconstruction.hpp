#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "epg/graph.hpp"
#include "epg/twins.hpp"

namespace epg {

enum class InputClass { complete, cyclic_non_prime_power, non_cyclic };

std::string_view to_string(InputClass c);

/// An edge added by the pairwise rule together with the common neighbor that
/// justified it (the lowest-index witness).
struct AddedEdge {
    Vertex a;
    Vertex b;
    std::optional<Vertex> witness;  // empty when the whole graph was completed

    bool operator==(const AddedEdge&) const = default;
};

/// Outcome of rebuilding the enhanced power graph. The input is assumed to be
/// the power graph of some finite group; nothing here certifies that, and the
/// result for other graphs carries no meaning.
struct ReconstructionReport {
    InputClass input_class = InputClass::complete;
    std::size_t universal_count = 0;
    std::vector<AddedEdge> added_edges;  // sorted by (a, b), a < b
    Graph output;
    TwinCounts counts;  // filled only for non-cyclic inputs
    static constexpr bool assumes_power_graph = true;
};

/// Complete graphs (n <= 2 included) are `complete`; otherwise more than two
/// universal vertices means a cyclic group of non-prime-power order.
InputClass classify_input(const Graph& graph);

/// First common neighbor c of non-adjacent a, b with N_c > N_a when
/// N_a == N_b, or N_c >= max(N_a, N_b) otherwise. Throws std::invalid_argument
/// for a == b or adjacent a, b.
std::optional<Vertex> find_witness(const Graph& graph, const TwinCounts& counts, Vertex a, Vertex b);

/// Whether non-adjacent a, b are adjacent in the enhanced power graph. Only
/// meaningful for inputs classified `non_cyclic`.
bool decide_pair(const Graph& graph, const TwinCounts& counts, Vertex a, Vertex b);

/// OpenMP over the first vertex of each candidate pair.
ReconstructionReport reconstruct_enhanced(const Graph& power);

/// Difference graph with isolated vertices dropped; `original[i]` is the
/// input index of vertex i.
struct DifferenceGraph {
    Graph graph;
    std::vector<Vertex> original;
};

DifferenceGraph difference_graph_from_power(const Graph& power);

/// Builds the difference graph from an explicit list of added edges.
DifferenceGraph difference_graph(std::size_t vertex_count, std::span<const Edge> added);

namespace reference {
ReconstructionReport reconstruct_enhanced(const Graph& power);
}  // namespace reference

}  // namespace epg
