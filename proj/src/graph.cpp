#include "epg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace epg {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
    const std::size_t n = adjacency_.size();
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adjacency_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("duplicate neighbor at vertex " + std::to_string(v));
        for (Vertex u : list) {
            if (u >= n) throw std::invalid_argument("neighbor " + std::to_string(u) + " out of range");
            if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(v));
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        for (Vertex u : adjacency_[v])
            if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), static_cast<Vertex>(v)))
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adjacency(vertex_count);
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self loop at vertex " + std::to_string(a));
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return Graph(std::move(adjacency));
}

Graph Graph::complete(std::size_t vertex_count) {
    std::vector<std::vector<Vertex>> adjacency(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v)
        for (std::size_t u = 0; u < vertex_count; ++u)
            if (u != v) adjacency[v].push_back(static_cast<Vertex>(u));
    return Graph(std::move(adjacency));
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& list : adjacency_) total += list.size();
    return total / 2;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& list = adjacency_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t v = 0; v < adjacency_.size(); ++v)
        for (Vertex u : adjacency_[v])
            if (u > v) out.emplace_back(static_cast<Vertex>(v), u);
    return out;
}

bool cyclic_contained(const FiniteGroup& group, Element a, Element b) {
    const auto orders = group.element_orders();
    if (orders[b] % orders[a] != 0) return false;
    if (a == group.identity()) return true;
    for (Element p = b; p != group.identity(); p = group.multiply(p, b))
        if (p == a) return true;
    return false;
}

namespace {

// membership[c * n + x] != 0 iff x is in <c>.
std::vector<char> membership_matrix(const FiniteGroup& group) {
    const std::size_t n = group.order();
    std::vector<char> member(n * n, 0);
    for (std::size_t c = 0; c < n; ++c) {
        member[c * n] = 1;
        for (Element p = static_cast<Element>(c); p != 0; p = group.multiply(p, static_cast<Element>(c))) member[c * n + p] = 1;
    }
    return member;
}

void power_row(const FiniteGroup& group, const std::vector<char>& member, std::size_t a, std::vector<Vertex>& row) {
    const std::size_t n = group.order();
    const auto orders = group.element_orders();
    for (std::size_t b = 0; b < n; ++b) {
        if (b == a) continue;
        const bool a_in_b = orders[b] % orders[a] == 0 && member[b * n + a];
        const bool b_in_a = orders[a] % orders[b] == 0 && member[a * n + b];
        if (a_in_b || b_in_a) row.push_back(static_cast<Vertex>(b));
    }
}

void enhanced_row(const std::vector<char>& member, std::size_t n, std::size_t a, std::vector<char>& scratch,
                  std::vector<Vertex>& row) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
        if (!member[c * n + a]) continue;
        for (std::size_t x = 0; x < n; ++x) scratch[x] |= member[c * n + x];
    }
    for (std::size_t b = 0; b < n; ++b)
        if (b != a && scratch[b]) row.push_back(static_cast<Vertex>(b));
}

}  // namespace

Graph power_graph(const FiniteGroup& group) {
    const std::size_t n = group.order();
    const auto member = membership_matrix(group);
    std::vector<std::vector<Vertex>> adjacency(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(n); ++a) power_row(group, member, a, adjacency[a]);
    return Graph(std::move(adjacency));
}

Graph enhanced_power_graph(const FiniteGroup& group) {
    const std::size_t n = group.order();
    const auto member = membership_matrix(group);
    std::vector<std::vector<Vertex>> adjacency(n);
#pragma omp parallel
    {
        std::vector<char> scratch(n);
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(n); ++a) enhanced_row(member, n, a, scratch, adjacency[a]);
    }
    return Graph(std::move(adjacency));
}

namespace reference {

Graph power_graph(const FiniteGroup& group) {
    const std::size_t n = group.order();
    const auto member = membership_matrix(group);
    std::vector<std::vector<Vertex>> adjacency(n);
    for (std::size_t a = 0; a < n; ++a) power_row(group, member, a, adjacency[a]);
    return Graph(std::move(adjacency));
}

Graph enhanced_power_graph(const FiniteGroup& group) {
    const std::size_t n = group.order();
    const auto member = membership_matrix(group);
    std::vector<std::vector<Vertex>> adjacency(n);
    std::vector<char> scratch(n);
    for (std::size_t a = 0; a < n; ++a) enhanced_row(member, n, a, scratch, adjacency[a]);
    return Graph(std::move(adjacency));
}

}  // namespace reference

bool is_complete(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (graph.degree(v) != n - 1) return false;
    return true;
}

std::vector<Vertex> universal_vertices(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (graph.degree(v) == n - 1) out.push_back(v);
    return out;
}

std::vector<Edge> edge_difference(const Graph& larger, const Graph& smaller) {
    if (larger.vertex_count() != smaller.vertex_count()) throw std::invalid_argument("edge_difference: vertex counts differ");
    std::vector<Edge> out;
    for (auto [a, b] : larger.edges())
        if (!smaller.adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

}  // namespace epg
