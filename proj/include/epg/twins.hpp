#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epg/graph.hpp"
#include "epg/group.hpp"

namespace epg {

/// N_v = (number of closed twins of v) + 1 for every vertex, computed from
/// the graph alone.
struct TwinCounts {
    std::vector<std::size_t> counts;

    std::size_t operator[](Vertex v) const { return counts.at(v); }
    std::size_t size() const noexcept { return counts.size(); }
    bool operator==(const TwinCounts&) const = default;
};

/// Closed-form twin counts derived from the group. std::nullopt marks a
/// vertex the closed form does not cover: a non-identity element of
/// prime-power order in a non-cyclic group with no cyclic overgroup of
/// non-prime-power order.
struct FormulaCounts {
    std::vector<std::optional<std::size_t>> counts;

    std::size_t covered() const noexcept;
    std::size_t size() const noexcept { return counts.size(); }
};

/// Neighbors b of a with N(a) \ {b} == N(b) \ {a}, sorted.
std::vector<Vertex> closed_twins(const Graph& graph, Vertex a);

/// OpenMP over vertices.
TwinCounts twin_counts(const Graph& graph);

FormulaCounts formula_twin_counts(const FiniteGroup& group);

struct MonotonicityViolation {
    Element smaller;  // <smaller> is contained in <larger>
    Element larger;
    std::size_t smaller_count;
    std::size_t larger_count;
};

/// Every pair h, k with <h> contained in <k> must satisfy N_h <= N_k.
/// Returns the offending pairs. Throws std::invalid_argument when the group is
/// cyclic, where the property is not claimed.
std::vector<MonotonicityViolation> check_monotonicity(const FiniteGroup& group, const Graph& graph, const TwinCounts& counts);

namespace reference {
TwinCounts twin_counts(const Graph& graph);
}  // namespace reference

}  // namespace epg
