#pragma once

// Brute-force oracles used only by tests. They work from definitions with
// std::set and repeated multiplication, and share no code with the library
// kernels beyond FiniteGroup::multiply and the Graph container.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "epg/graph.hpp"
#include "epg/group.hpp"

namespace oracle {

inline std::size_t order_of(const epg::FiniteGroup& g, epg::Element a) {
    std::size_t d = 1;
    for (epg::Element p = a; p != g.identity(); p = g.multiply(p, a)) ++d;
    return d;
}

inline std::set<epg::Element> powers(const epg::FiniteGroup& g, epg::Element a) {
    std::set<epg::Element> out{g.identity()};
    for (epg::Element p = a; p != g.identity(); p = g.multiply(p, a)) out.insert(p);
    return out;
}

inline std::size_t phi(std::size_t n) {
    std::size_t count = 0;
    for (std::size_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

inline bool prime_power(std::size_t n) {
    if (n < 2) return false;
    std::size_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline bool subset(const std::set<epg::Element>& a, const std::set<epg::Element>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline epg::Graph power_graph(const epg::FiniteGroup& g) {
    std::vector<std::set<epg::Element>> sub(g.order());
    for (epg::Element a = 0; a < g.order(); ++a) sub[a] = powers(g, a);
    std::vector<epg::Edge> edges;
    for (epg::Element a = 0; a < g.order(); ++a)
        for (epg::Element b = a + 1; b < g.order(); ++b)
            if (subset(sub[a], sub[b]) || subset(sub[b], sub[a])) edges.emplace_back(a, b);
    return epg::Graph::from_edges(g.order(), edges);
}

inline epg::Graph enhanced_power_graph(const epg::FiniteGroup& g) {
    std::vector<std::set<epg::Element>> sub(g.order());
    for (epg::Element a = 0; a < g.order(); ++a) sub[a] = powers(g, a);
    std::vector<epg::Edge> edges;
    for (epg::Element a = 0; a < g.order(); ++a)
        for (epg::Element b = a + 1; b < g.order(); ++b)
            for (const auto& s : sub)
                if (s.count(a) && s.count(b)) {
                    edges.emplace_back(a, b);
                    break;
                }
    return epg::Graph::from_edges(g.order(), edges);
}

inline std::set<epg::Vertex> neighborhood(const epg::Graph& x, epg::Vertex a) {
    return {x.neighbors(a).begin(), x.neighbors(a).end()};
}

inline std::set<epg::Vertex> closed_twins(const epg::Graph& x, epg::Vertex a) {
    std::set<epg::Vertex> out;
    const auto na = neighborhood(x, a);
    for (epg::Vertex b : na) {
        auto lhs = na;
        auto rhs = neighborhood(x, b);
        lhs.erase(b);
        rhs.erase(a);
        if (lhs == rhs) out.insert(b);
    }
    return out;
}

inline bool eppo(const epg::FiniteGroup& g) {
    for (epg::Element a = 0; a < g.order(); ++a) {
        const auto d = order_of(g, a);
        if (d != 1 && !prime_power(d)) return false;
    }
    return true;
}

// Figure graph for D6: vertex v_k is index k-1. v1 is universal, v2..v7 are
// reflections, v8 the rotation of order 2, v9 v10 of order 3, v11 v12 of
// order 6.
inline std::vector<epg::Edge> figure_solid_edges() {
    std::vector<epg::Edge> edges;
    for (epg::Vertex j = 1; j < 12; ++j) edges.emplace_back(0, j);
    const std::array<std::pair<int, int>, 8> extra{{{9, 10}, {9, 11}, {10, 12}, {11, 12}, {10, 11}, {9, 12}, {8, 11}, {8, 12}}};
    for (auto [a, b] : extra) edges.emplace_back(a - 1, b - 1);
    return edges;
}

inline std::vector<epg::Edge> figure_dotted_edges() { return {{7, 8}, {7, 9}}; }

// figure vertex index -> element index of dihedral(6) (r^i s^j at i + 6j).
inline std::vector<epg::Element> figure_to_dihedral6() { return {0, 6, 7, 8, 9, 10, 11, 3, 2, 4, 1, 5}; }

inline epg::Graph relabel(const epg::Graph& x, const std::vector<epg::Element>& from_new_to_old) {
    std::vector<epg::Element> old_to_new(from_new_to_old.size());
    for (std::size_t i = 0; i < from_new_to_old.size(); ++i) old_to_new[from_new_to_old[i]] = static_cast<epg::Element>(i);
    std::vector<epg::Edge> edges;
    for (auto [a, b] : x.edges()) edges.emplace_back(old_to_new[a], old_to_new[b]);
    return epg::Graph::from_edges(x.vertex_count(), edges);
}

}  // namespace oracle
