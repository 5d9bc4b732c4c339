#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "epg/group.hpp"

namespace epg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph. Neighbor lists are kept sorted so membership is a
/// binary search and neighborhoods compare as sorted sequences.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

    /// Validates symmetry, irreflexivity and range; sorts and rejects
    /// duplicate neighbors. Throws std::invalid_argument.
    explicit Graph(std::vector<std::vector<Vertex>> adjacency);

    /// Edges may come in any order and orientation; duplicates are merged.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
    static Graph complete(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept;
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex a, Vertex b) const;

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
};

/// a ~ b iff <a> contains <b> or <b> contains <a>. OpenMP over rows.
Graph power_graph(const FiniteGroup& group);

/// a ~ b iff a and b lie in a common cyclic subgroup <c>, found by scanning
/// every c. Ground truth for reconstruction. OpenMP over rows.
Graph enhanced_power_graph(const FiniteGroup& group);

bool is_complete(const Graph& graph);
std::vector<Vertex> universal_vertices(const Graph& graph);

/// Whether <a> is a subgroup of <b>: order divisibility, then membership of a
/// in <b>.
bool cyclic_contained(const FiniteGroup& group, Element a, Element b);

/// Edges of `larger` not present in `smaller`; both must share a vertex set.
std::vector<Edge> edge_difference(const Graph& larger, const Graph& smaller);

namespace reference {
// Single-threaded builders kept as the baseline for the OpenMP versions.
Graph power_graph(const FiniteGroup& group);
Graph enhanced_power_graph(const FiniteGroup& group);
}  // namespace reference

}  // namespace epg
