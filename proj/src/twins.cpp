#include "epg/twins.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "epg/number_theory.hpp"

namespace epg {

namespace {

// Compares N(a) \ {b} with N(b) \ {a} as sorted sequences.
bool same_masked_neighborhood(std::span<const Vertex> na, std::span<const Vertex> nb, Vertex a, Vertex b) {
    if (na.size() != nb.size()) return false;
    auto i = na.begin(), j = nb.begin();
    while (true) {
        if (i != na.end() && *i == b) ++i;
        if (j != nb.end() && *j == a) ++j;
        if (i == na.end() || j == nb.end()) return i == na.end() && j == nb.end();
        if (*i != *j) return false;
        ++i;
        ++j;
    }
}

std::size_t count_closed_twins(const Graph& graph, Vertex a) {
    std::size_t count = 0;
    const auto na = graph.neighbors(a);
    for (Vertex b : na)
        if (same_masked_neighborhood(na, graph.neighbors(b), a, b)) ++count;
    return count;
}

}  // namespace

std::size_t FormulaCounts::covered() const noexcept {
    return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](const auto& c) { return c.has_value(); }));
}

std::vector<Vertex> closed_twins(const Graph& graph, Vertex a) {
    if (a >= graph.vertex_count()) throw std::out_of_range("vertex " + std::to_string(a) + " out of range");
    std::vector<Vertex> twins;
    const auto na = graph.neighbors(a);
    for (Vertex b : na)
        if (same_masked_neighborhood(na, graph.neighbors(b), a, b)) twins.push_back(b);
    return twins;
}

TwinCounts twin_counts(const Graph& graph) {
    const auto n = static_cast<std::ptrdiff_t>(graph.vertex_count());
    TwinCounts result{std::vector<std::size_t>(n)};
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t v = 0; v < n; ++v) result.counts[v] = count_closed_twins(graph, static_cast<Vertex>(v)) + 1;
    return result;
}

namespace reference {
TwinCounts twin_counts(const Graph& graph) {
    TwinCounts result{std::vector<std::size_t>(graph.vertex_count())};
    for (Vertex v = 0; v < graph.vertex_count(); ++v) result.counts[v] = closed_twins(graph, v).size() + 1;
    return result;
}
}  // namespace reference

FormulaCounts formula_twin_counts(const FiniteGroup& group) {
    const std::size_t n = group.order();
    const auto orders = group.element_orders();
    FormulaCounts result{std::vector<std::optional<std::size_t>>(n)};

    if (is_cyclic(group)) {
        if (n == 1 || is_prime_power(n)) {
            std::fill(result.counts.begin(), result.counts.end(), n);
            return result;
        }
        for (Element a = 0; a < n; ++a) {
            if (a == group.identity() || orders[a] == n)
                result.counts[a] = euler_phi(n) + 1;
            else
                result.counts[a] = euler_phi(orders[a]);
        }
        return result;
    }

    // Non-cyclic: which elements lie properly inside a cyclic subgroup of
    // non-prime-power order.
    std::vector<char> under_mixed(n, 0);
    for (Element b = 0; b < n; ++b) {
        if (orders[b] == 1 || is_prime_power(orders[b])) continue;
        for (Element x : cyclic_subgroup(group, b))
            if (orders[x] != orders[b]) under_mixed[x] = 1;
    }
    result.counts[group.identity()] = is_generalized_quaternion(group) ? 2 : 1;
    for (Element a = 1; a < n; ++a) {
        if (!is_prime_power(orders[a]) || under_mixed[a]) result.counts[a] = euler_phi(orders[a]);
    }
    return result;
}

std::vector<MonotonicityViolation> check_monotonicity(const FiniteGroup& group, const Graph& graph, const TwinCounts& counts) {
    if (is_cyclic(group)) throw std::invalid_argument("check_monotonicity: group is cyclic; monotonicity is stated for non-cyclic groups");
    if (graph.vertex_count() != group.order() || counts.size() != group.order())
        throw std::invalid_argument("check_monotonicity: graph, counts and group sizes differ");

    const auto poset = cyclic_subgroup_poset(group);
    std::vector<std::vector<Element>> gens(poset.size());
    for (std::size_t s = 0; s < poset.size(); ++s) gens[s] = generators_of_cyclic(group, poset.representatives[s]);

    std::vector<MonotonicityViolation> violations;
    auto check = [&](std::size_t s, std::size_t t) {
        for (Element h : gens[s])
            for (Element k : gens[t])
                if (counts[h] > counts[k]) violations.push_back({h, k, counts[h], counts[k]});
    };
    for (std::size_t s = 0; s < poset.size(); ++s) check(s, s);
    for (auto [s, t] : poset.inclusion) check(s, t);
    return violations;
}

}  // namespace epg
