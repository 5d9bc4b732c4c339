#include "epg/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "epg/graph.hpp"
#include "epg/number_theory.hpp"
#include "epg/reconstruction.hpp"
#include "epg/twins.hpp"

namespace epg {

bool GroupVerification::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* GroupVerification::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

const CheckResult* GroupVerification::find(const std::string& check) const {
    for (const auto& c : checks)
        if (c.name == check) return &c;
    return nullptr;
}

const std::vector<std::string>& verification_check_names() {
    static const std::vector<std::string> names{
        "table-valid",          "order-divides",          "generator-count",     "poset-structure",
        "totient-monotone",     "totient-rigidity",       "product-orders",      "known-cyclic",
        "known-quaternion",     "containment-paths",      "power-in-enhanced",   "identity-universal",
        "divisibility-adjacency", "universal-count",      "single-universal-noncyclic", "twin-symmetry",
        "generator-lower-bound", "same-subgroup-equal",   "formula-agreement",   "non-prime-power-exact",
        "universal-twin-count", "prime-power-twin-restriction", "monotonicity",  "oracle-equivalence",
        "superset",             "difference-consistency", "eppo-detection",      "witness-valid",
        "complete-idempotent",  "parallel-matches-reference"};
    return names;
}

namespace {

using Failure = std::optional<std::string>;

std::string pair_text(const FiniteGroup& g, Element a, Element b) {
    return "(" + g.label(a) + ", " + g.label(b) + ")";
}

// Latin square and associativity, re-checked independently of construction.
Failure check_table(const FiniteGroup& g) {
    const std::size_t n = g.order();
    for (Element i = 0; i < n; ++i) {
        std::vector<char> row(n), col(n);
        for (Element j = 0; j < n; ++j) {
            if (row[g.multiply(i, j)]++ || col[g.multiply(j, i)]++) return "Latin property fails at element " + g.label(i);
            if (g.multiply(0, j) != j || g.multiply(j, 0) != j) return "identity law fails at " + g.label(j);
        }
    }
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j)
            for (Element k = 0; k < n; ++k)
                if (g.multiply(g.multiply(i, j), k) != g.multiply(i, g.multiply(j, k)))
                    return "associativity fails at (" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + ")";
    return std::nullopt;
}

Failure check_poset(const FiniteGroup& g, const CyclicSubgroupPoset& poset) {
    if (poset.size() == 0 || poset.subgroups.front() != std::vector<Element>{0}) return "trivial subgroup missing or not first";
    for (std::size_t s = 0; s < poset.size(); ++s) {
        if (cyclic_subgroup(g, poset.representatives[s]) != poset.subgroups[s]) return "subgroup " + std::to_string(s) + " is not <rep>";
        for (std::size_t t = s + 1; t < poset.size(); ++t)
            if (poset.subgroups[s] == poset.subgroups[t]) return "duplicate subgroup";
    }
    std::vector<std::vector<char>> rel(poset.size(), std::vector<char>(poset.size(), 0));
    for (auto [s, t] : poset.inclusion) rel[s][t] = 1;
    for (std::size_t t = 1; t < poset.size(); ++t)
        if (!rel[0][t]) return "trivial subgroup not below subgroup " + std::to_string(t);
    for (std::size_t s = 0; s < poset.size(); ++s) {
        if (rel[s][s]) return "inclusion is reflexive";
        for (std::size_t t = 0; t < poset.size(); ++t) {
            const auto& a = poset.subgroups[s];
            const auto& b = poset.subgroups[t];
            const bool proper = a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
            if (proper != static_cast<bool>(rel[s][t])) return "inclusion relation inexact";
            for (std::size_t u = 0; u < poset.size(); ++u)
                if (rel[s][t] && rel[t][u] && !rel[s][u]) return "inclusion not transitive";
        }
    }
    return std::nullopt;
}

// Element orders of a left-folded product are lcms of the component orders.
Failure check_product_orders(const FiniteGroup& g, const GroupSpec& spec) {
    std::vector<FiniteGroup> factors;
    for (const auto& f : spec.factors) factors.push_back(make_group(f));
    for (Element a = 0; a < g.order(); ++a) {
        std::size_t rest = a, expected = 1;
        for (const auto& f : factors) {
            const auto component = static_cast<Element>(rest % f.order());
            rest /= f.order();
            expected = std::lcm(expected, element_order(f, component));
        }
        if (element_order(g, a) != expected) return "order of " + g.label(a) + " is not the lcm of its components";
    }
    return std::nullopt;
}

std::size_t expected_universal(const FiniteGroup& g) {
    const std::size_t n = g.order();
    if (is_cyclic(g)) return n == 1 || is_prime_power(n) ? n : 1 + euler_phi(n);
    return is_generalized_quaternion(g) ? 2 : 1;
}

struct Recorder {
    GroupVerification& out;
    void operator()(const std::string& name, const std::function<Failure()>& body) {
        Failure f;
        try {
            f = body();
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        out.checks.push_back({name, !f.has_value(), f.value_or("")});
    }
};

}  // namespace

GroupVerification verify_entry(const CatalogEntry& entry) {
    GroupVerification result;
    result.name = entry.name;
    Recorder check{result};

    std::optional<FiniteGroup> built;
    try {
        built = make_group(entry.spec);
    } catch (const std::exception& e) {
        result.checks.push_back({"table-valid", false, e.what()});
        return result;
    }
    const FiniteGroup& g = *built;
    const std::size_t n = g.order();
    result.order = n;
    const auto orders = g.element_orders();
    const bool cyclic = is_cyclic(g);
    const auto poset = cyclic_subgroup_poset(g);

    // Group level.
    check("table-valid", [&]() -> Failure {
        if (n != entry.order) return "order " + std::to_string(n) + " differs from catalog order " + std::to_string(entry.order);
        return check_table(g);
    });
    check("order-divides", [&]() -> Failure {
        for (Element a = 0; a < n; ++a)
            if (n % orders[a] != 0) return "order of " + g.label(a) + " does not divide |G|";
        return std::nullopt;
    });
    check("generator-count", [&]() -> Failure {
        for (Element a = 0; a < n; ++a)
            if (generators_of_cyclic(g, a).size() != euler_phi(orders[a])) return "|gen<" + g.label(a) + ">| != phi(order)";
        return std::nullopt;
    });
    check("poset-structure", [&] { return check_poset(g, poset); });
    check("totient-monotone", [&]() -> Failure {
        for (auto [s, t] : poset.inclusion)
            if (euler_phi(poset.subgroups[s].size()) > euler_phi(poset.subgroups[t].size()))
                return "phi decreases from subgroup " + std::to_string(s) + " to " + std::to_string(t);
        return std::nullopt;
    });
    check("totient-rigidity", [&]() -> Failure {
        for (auto [s, t] : poset.inclusion) {
            const std::size_t h = poset.subgroups[s].size(), k = poset.subgroups[t].size();
            if (euler_phi(h) == euler_phi(k) && k != h && k != 2 * h)
                return "equal phi for orders " + std::to_string(h) + " and " + std::to_string(k);
        }
        return std::nullopt;
    });
    if (entry.spec.family == GroupFamily::direct_product)
        check("product-orders", [&] { return check_product_orders(g, entry.spec); });
    check("known-cyclic", [&]() -> Failure {
        if (cyclic != entry.known.cyclic) return std::string("cyclicity disagrees with catalog");
        return std::nullopt;
    });
    check("known-quaternion", [&]() -> Failure {
        if (is_generalized_quaternion(g) != entry.known.generalized_quaternion) return std::string("quaternion flag disagrees with catalog");
        return std::nullopt;
    });

    // Graph level.
    const Graph power = power_graph(g);
    const Graph enhanced = enhanced_power_graph(g);
    const auto universal = universal_vertices(power);
    result.universal_count = universal.size();

    check("containment-paths", [&]() -> Failure {
        std::vector<std::vector<Element>> subs(n);
        for (Element a = 0; a < n; ++a) subs[a] = cyclic_subgroup(g, a);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const bool by_sets = std::includes(subs[b].begin(), subs[b].end(), subs[a].begin(), subs[a].end());
                if (by_sets != cyclic_contained(g, a, b)) return "containment paths disagree on " + pair_text(g, a, b);
            }
        return std::nullopt;
    });
    check("power-in-enhanced", [&]() -> Failure {
        for (auto [a, b] : power.edges())
            if (!enhanced.adjacent(a, b)) return "power edge missing from enhanced graph: " + pair_text(g, a, b);
        return std::nullopt;
    });
    check("identity-universal", [&]() -> Failure {
        if (n > 1 && (power.degree(0) != n - 1 || enhanced.degree(0) != n - 1)) return std::string("identity is not universal");
        return std::nullopt;
    });
    check("divisibility-adjacency", [&]() -> Failure {
        for (Element c = 0; c < n; ++c) {
            const auto sub = cyclic_subgroup(g, c);
            for (Element a : sub)
                for (Element b : sub)
                    if (a != b && orders[b] % orders[a] == 0 && !power.adjacent(a, b))
                        return "divisible orders inside <" + g.label(c) + "> but not adjacent: " + pair_text(g, a, b);
        }
        return std::nullopt;
    });
    check("universal-count", [&]() -> Failure {
        const std::size_t u = universal.size();
        const bool allowed = u == 1 || u == 2 || u == n || (u == 1 + euler_phi(n));
        if (!allowed) return "|U| = " + std::to_string(u) + " is not one of 1, 2, 1+phi(n), n";
        if (u != expected_universal(g)) return "|U| = " + std::to_string(u) + ", expected " + std::to_string(expected_universal(g));
        if (entry.known.universal_count && *entry.known.universal_count != u)
            return "|U| = " + std::to_string(u) + ", catalog expects " + std::to_string(*entry.known.universal_count);
        return std::nullopt;
    });
    check("single-universal-noncyclic", [&]() -> Failure {
        if (!is_complete(power) && universal.size() == 1 && cyclic) return std::string("incomplete with |U| = 1 but group is cyclic");
        return std::nullopt;
    });

    // Twin counts.
    const TwinCounts counts = twin_counts(power);
    const FormulaCounts formula = formula_twin_counts(g);
    result.identity_twin_count = counts[0];
    result.formula_covered = formula.covered();

    check("twin-symmetry", [&]() -> Failure {
        std::vector<std::vector<Vertex>> twins(n);
        for (Vertex a = 0; a < n; ++a) twins[a] = closed_twins(power, a);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b : twins[a])
                if (!std::binary_search(twins[b].begin(), twins[b].end(), a)) return "twin relation asymmetric on " + pair_text(g, a, b);
        return std::nullopt;
    });
    check("generator-lower-bound", [&]() -> Failure {
        for (Element a = 0; a < n; ++a)
            if (euler_phi(orders[a]) > counts[a]) return "phi(order) exceeds N at " + g.label(a);
        return std::nullopt;
    });
    check("same-subgroup-equal", [&]() -> Failure {
        for (Element a = 0; a < n; ++a)
            for (Element b : generators_of_cyclic(g, a))
                if (counts[a] != counts[b]) return "generators of one subgroup differ in N: " + pair_text(g, a, b);
        return std::nullopt;
    });
    check("formula-agreement", [&]() -> Failure {
        for (Element a = 0; a < n; ++a)
            if (formula.counts[a] && *formula.counts[a] != counts[a])
                return "formula gives " + std::to_string(*formula.counts[a]) + " but graph gives " + std::to_string(counts[a]) + " at " +
                       g.label(a);
        return std::nullopt;
    });
    check("non-prime-power-exact", [&]() -> Failure {
        if (cyclic) return std::nullopt;
        for (Element a = 1; a < n; ++a)
            if (!is_prime_power(orders[a]) && counts[a] != euler_phi(orders[a])) return "N != phi(order) at " + g.label(a);
        return std::nullopt;
    });
    check("universal-twin-count", [&]() -> Failure {
        for (Vertex u : universal)
            if (counts[u] != universal.size()) return "universal vertex " + g.label(u) + " has N != |U|";
        return std::nullopt;
    });
    check("prime-power-twin-restriction", [&]() -> Failure {
        for (Element h = 1; h < n; ++h) {
            const auto p = prime_power_base(orders[h]);
            if (!p) continue;
            for (Vertex k : closed_twins(power, h))
                if (orders[k] != 1 && prime_power_base(orders[k]) != p)
                    return "twin " + g.label(k) + " of " + g.label(h) + " has order outside the same prime";
        }
        return std::nullopt;
    });
    check("monotonicity", [&]() -> Failure {
        if (cyclic) return std::nullopt;
        const auto violations = check_monotonicity(g, power, counts);
        if (violations.empty()) return std::nullopt;
        const auto& v = violations.front();
        return std::to_string(violations.size()) + " violations, first " + pair_text(g, v.smaller, v.larger);
    });

    // Reconstruction.
    const auto report = reconstruct_enhanced(power);
    result.added_edges = report.added_edges.size();
    result.input_class = std::string(to_string(report.input_class));
    const auto truth_diff = edge_difference(enhanced, power);

    check("oracle-equivalence", [&]() -> Failure {
        if (report.output == enhanced) return std::nullopt;
        for (auto [a, b] : enhanced.edges())
            if (!report.output.adjacent(a, b)) return "missing edge " + pair_text(g, a, b);
        for (auto [a, b] : report.output.edges())
            if (!enhanced.adjacent(a, b)) return "spurious edge " + pair_text(g, a, b);
        return std::string("graphs differ");
    });
    check("superset", [&]() -> Failure {
        for (auto [a, b] : power.edges())
            if (!report.output.adjacent(a, b)) return "input edge dropped: " + pair_text(g, a, b);
        for (const auto& e : report.added_edges)
            if (power.adjacent(e.a, e.b)) return "added edge already present: " + pair_text(g, e.a, e.b);
        return std::nullopt;
    });
    check("difference-consistency", [&]() -> Failure {
        const auto ours = difference_graph_from_power(power);
        const auto truth = difference_graph(n, truth_diff);
        if (ours.graph != truth.graph || ours.original != truth.original) return std::string("difference graph differs from oracle");
        return std::nullopt;
    });
    check("eppo-detection", [&]() -> Failure {
        const bool eppo = std::all_of(orders.begin(), orders.end(), [](std::size_t d) { return d == 1 || is_prime_power(d); });
        if (eppo != entry.known.eppo) return std::string("EPPO flag disagrees with catalog");
        if (eppo != report.added_edges.empty())
            return eppo ? "EPPO group but reconstruction added edges" : "non-EPPO group but reconstruction added no edges";
        return std::nullopt;
    });
    check("witness-valid", [&]() -> Failure {
        for (const auto& e : report.added_edges) {
            if (report.input_class != InputClass::non_cyclic) {
                if (e.witness) return std::string("witness recorded for a cyclic input");
                continue;
            }
            if (!e.witness) return "no witness for " + pair_text(g, e.a, e.b);
            const Vertex c = *e.witness;
            const auto& t = report.counts;
            const bool ok = power.adjacent(c, e.a) && power.adjacent(c, e.b) &&
                            (t[e.a] == t[e.b] ? t[c] > t[e.a] : t[c] >= std::max(t[e.a], t[e.b]));
            if (!ok) return "witness " + g.label(c) + " invalid for " + pair_text(g, e.a, e.b);
        }
        return std::nullopt;
    });
    check("complete-idempotent", [&]() -> Failure {
        const Graph k = Graph::complete(n);
        const auto r = reconstruct_enhanced(k);
        if (r.output != k || !r.added_edges.empty() || r.input_class != InputClass::complete)
            return std::string("complete input changed");
        return std::nullopt;
    });
    check("parallel-matches-reference", [&]() -> Failure {
        if (reference::power_graph(g) != power) return std::string("power graph");
        if (reference::enhanced_power_graph(g) != enhanced) return std::string("enhanced power graph");
        if (reference::twin_counts(power) != counts) return std::string("twin counts");
        const auto serial = reference::reconstruct_enhanced(power);
        if (serial.added_edges != report.added_edges || serial.output != report.output) return std::string("reconstruction");
        return std::nullopt;
    });
    return result;
}

std::vector<GroupVerification> verify_catalog(const std::vector<CatalogEntry>& catalog) {
    std::vector<GroupVerification> results(catalog.size());
    const auto count = static_cast<std::ptrdiff_t>(catalog.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            results[i] = verify_entry(catalog[i]);
        } catch (const std::exception& e) {
            results[i].name = catalog[i].name;
            results[i].checks.push_back({"table-valid", false, std::string("exception: ") + e.what()});
        }
    }
    return results;
}

}  // namespace epg
