#include "epg/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "epg/number_theory.hpp"

namespace epg {

TableError::TableError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

constexpr std::size_t kMaxSymmetricDegree = 6;
constexpr std::size_t kMaxQuaternionExponent = 12;

// Reports violations against the 1-based row that contains them.
void validate_table(std::size_t n, std::span<const Element> table, bool identity_at_zero) {
    if (n == 0) throw TableError(0, "group must have at least one element");
    if (table.size() != n * n) throw TableError(0, "table must have order^2 entries");

    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            const Element v = table[i * n + j];
            if (v >= n) throw TableError(i + 1, "entry " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
            if (seen[v]) throw TableError(i + 1, "row repeats element " + std::to_string(v) + " (not a Latin square)");
            seen[v] = 1;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const Element v = table[i * n + j];
            if (seen[v]) throw TableError(i + 1, "column " + std::to_string(j) + " repeats element " + std::to_string(v) + " (not a Latin square)");
            seen[v] = 1;
        }
    }

    std::size_t neutral_count = 0;
    std::size_t neutral = 0;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = table[e * n + i] == i && table[i * n + e] == i;
        if (ok) {
            ++neutral_count;
            neutral = e;
        }
    }
    if (neutral_count != 1) throw TableError(0, "table has no two-sided identity element");
    if (identity_at_zero && neutral != 0) throw TableError(1, "element 0 is not the identity");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Element ij = table[i * n + j];
            for (std::size_t k = 0; k < n; ++k) {
                if (table[ij * n + k] != table[i * n + table[j * n + k]])
                    throw TableError(i + 1, "associativity fails for (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                                std::to_string(k) + ")");
            }
        }
}

std::string power_word(const char* symbol, std::size_t exponent) {
    if (exponent == 0) return "";
    if (exponent == 1) return symbol;
    return std::string(symbol) + "^" + std::to_string(exponent);
}

// Labels for x^i y^j words.
std::string two_letter_label(const char* x, const char* y, std::size_t i, std::size_t j) {
    std::string word = power_word(x, i) + (j ? y : "");
    return word.empty() ? "e" : word;
}

FiniteGroup make_cyclic(std::size_t n) {
    if (n < 1) throw std::invalid_argument("cyclic group requires n >= 1");
    std::vector<Element> table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : power_word("g", i);
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
    }
    return FiniteGroup(n, std::move(table), std::move(labels));
}

// Dihedral group of order 2n, element r^i s^j at index i + n*j; s r = r^-1 s.
FiniteGroup make_dihedral(std::size_t n) {
    if (n < 1) throw std::invalid_argument("dihedral group requires n >= 1");
    const std::size_t order = 2 * n;
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) {
        const std::size_t i = a % n, j = a / n;
        labels[a] = two_letter_label("r", "s", i, j);
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t k = b % n, l = b / n;
            const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
            table[a * order + b] = static_cast<Element>(rot + n * (j ^ l));
        }
    }
    return FiniteGroup(order, std::move(table), std::move(labels));
}

// Dicyclic presentation <x, y | x^m = e, y^2 = x^(m/2), y^-1 x y = x^-1>
// with m = 2^(exponent-1); element x^i y^j at index i + m*j.
FiniteGroup make_quaternion(std::size_t exponent) {
    if (exponent < 3) throw std::invalid_argument("generalized quaternion group requires exponent >= 3");
    if (exponent > kMaxQuaternionExponent) throw std::invalid_argument("generalized quaternion exponent too large");
    const std::size_t m = std::size_t{1} << (exponent - 1);
    const std::size_t order = 2 * m;
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) {
        const std::size_t i = a % m, j = a / m;
        labels[a] = two_letter_label("x", "y", i, j);
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t k = b % m, l = b / m;
            std::size_t x_part, y_part;
            if (j == 0) {
                x_part = (i + k) % m;
                y_part = l;
            } else if (l == 0) {
                x_part = (i + m - k) % m;
                y_part = 1;
            } else {
                x_part = (i + m - k + m / 2) % m;
                y_part = 0;
            }
            table[a * order + b] = static_cast<Element>(x_part + m * y_part);
        }
    }
    return FiniteGroup(order, std::move(table), std::move(labels));
}

// Permutations in lexicographic order (identity first); (st)(x) = s(t(x)).
FiniteGroup make_symmetric(std::size_t n) {
    if (n < 1) throw std::invalid_argument("symmetric group requires n >= 1");
    if (n > kMaxSymmetricDegree) throw std::invalid_argument("symmetric group degree too large");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::size_t>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Element>(i));

    const std::size_t order = perms.size();
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    std::vector<std::size_t> composed(n);
    for (std::size_t a = 0; a < order; ++a) {
        if (a == 0) {
            labels[a] = "e";
        } else {
            std::string word = "[";
            for (std::size_t x = 0; x < n; ++x) word += (x ? "," : "") + std::to_string(perms[a][x] + 1);
            labels[a] = word + "]";
        }
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
            table[a * order + b] = index.at(composed);
        }
    }
    return FiniteGroup(order, std::move(table), std::move(labels));
}

std::size_t parse_count(const std::string& token) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a non-negative integer, got '" + token + "'");
    }
    if (pos != token.size() || token.front() == '-') throw std::invalid_argument("expected a non-negative integer, got '" + token + "'");
    return static_cast<std::size_t>(value);
}

GroupSpec parse_single_spec(std::span<const std::string> tokens) {
    if (tokens.empty()) throw std::invalid_argument("empty group specification");
    const std::string& family = tokens[0];
    if (family == "table" || family == "external" || family == "external-table") {
        if (tokens.size() != 2) throw std::invalid_argument("'" + family + "' expects a CSV path");
        return GroupSpec::external(tokens[1]);
    }
    if (tokens.size() != 2) throw std::invalid_argument("'" + family + "' expects exactly one integer parameter");
    const std::size_t n = parse_count(tokens[1]);
    if (family == "cyclic" || family == "c" || family == "C") return GroupSpec::cyclic(n);
    if (family == "dihedral" || family == "d" || family == "D") return GroupSpec::dihedral(n);
    if (family == "q" || family == "Q" || family == "quaternion" || family == "generalized-quaternion")
        return GroupSpec::quaternion(n);
    if (family == "symmetric" || family == "s" || family == "S") return GroupSpec::symmetric(n);
    throw std::invalid_argument("unknown group family '" + family + "'");
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    validate_table(order_, table_, true);
    if (labels_.empty()) {
        labels_.resize(order_);
        for (std::size_t i = 0; i < order_; ++i) labels_[i] = std::to_string(i);
    }
    if (labels_.size() != order_) throw std::invalid_argument("label count must equal group order");

    orders_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
        std::size_t d = 1;
        Element power = static_cast<Element>(a);
        while (power != 0) {
            power = multiply(power, static_cast<Element>(a));
            ++d;
        }
        orders_[a] = d;
    }
}

std::string GroupSpec::name() const {
    switch (family) {
        case GroupFamily::cyclic: return "C" + std::to_string(parameter);
        case GroupFamily::dihedral: return "D" + std::to_string(2 * parameter);
        case GroupFamily::generalized_quaternion:
            return "Q" + std::to_string(parameter < 63 ? (std::uint64_t{1} << parameter) : 0);
        case GroupFamily::symmetric: return "S" + std::to_string(parameter);
        case GroupFamily::direct_product: {
            std::string out;
            for (const auto& f : factors) {
                if (!out.empty()) out += "x";
                const bool compound = f.family == GroupFamily::direct_product;
                out += compound ? "(" + f.name() + ")" : f.name();
            }
            return out;
        }
        case GroupFamily::external_table: return "table:" + table_path.string();
    }
    return "?";
}

GroupSpec parse_group_spec(std::span<const std::string> tokens) {
    std::vector<GroupSpec> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= tokens.size(); ++i) {
        if (i == tokens.size() || tokens[i] == "x") {
            factors.push_back(parse_single_spec(tokens.subspan(start, i - start)));
            start = i + 1;
        }
    }
    if (factors.size() == 1) return factors.front();
    return GroupSpec::product(std::move(factors));
}

FiniteGroup make_group(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupFamily::cyclic: return make_cyclic(spec.parameter);
        case GroupFamily::dihedral: return make_dihedral(spec.parameter);
        case GroupFamily::generalized_quaternion: return make_quaternion(spec.parameter);
        case GroupFamily::symmetric: return make_symmetric(spec.parameter);
        case GroupFamily::direct_product: {
            if (spec.factors.empty()) throw std::invalid_argument("direct product needs at least one factor");
            FiniteGroup result = make_group(spec.factors.front());
            for (std::size_t i = 1; i < spec.factors.size(); ++i) result = direct_product(result, make_group(spec.factors[i]));
            return result;
        }
        case GroupFamily::external_table: return read_cayley_csv(spec.table_path);
    }
    throw std::invalid_argument("unknown group family");
}

FiniteGroup direct_product(const FiniteGroup& first, const FiniteGroup& second) {
    const std::size_t n1 = first.order(), n2 = second.order();
    const std::size_t order = n1 * n2;
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) {
        const auto a1 = static_cast<Element>(a % n1), a2 = static_cast<Element>(a / n1);
        labels[a] = "(" + first.label(a1) + "," + second.label(a2) + ")";
        for (std::size_t b = 0; b < order; ++b) {
            const auto b1 = static_cast<Element>(b % n1), b2 = static_cast<Element>(b / n1);
            table[a * order + b] = static_cast<Element>(first.multiply(a1, b1) + n1 * second.multiply(a2, b2));
        }
    }
    return FiniteGroup(order, std::move(table), std::move(labels));
}

FiniteGroup group_from_table(std::size_t order, std::vector<Element> table) {
    validate_table(order, table, false);
    Element identity = 0;
    for (Element e = 0; e < order; ++e) {
        if (table[e * order + e] == e) {
            identity = e;
            break;
        }
    }
    // Swap the identity with index 0.
    std::vector<Element> relabel(order);
    std::iota(relabel.begin(), relabel.end(), Element{0});
    std::swap(relabel[0], relabel[identity]);
    std::vector<Element> relabeled(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t i = 0; i < order; ++i) {
        labels[relabel[i]] = std::to_string(i);
        for (std::size_t j = 0; j < order; ++j) relabeled[relabel[i] * order + relabel[j]] = relabel[table[i * order + j]];
    }
    return FiniteGroup(order, std::move(relabeled), std::move(labels));
}

FiniteGroup parse_cayley_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Element>> rows;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) {
            if (!rows.empty()) {
                // Only trailing blank lines are tolerated.
                std::string rest;
                while (std::getline(in, rest))
                    if (rest.find_first_not_of(" \t\r") != std::string::npos) throw TableError(line_no, "blank line inside table");
            }
            break;
        }
        std::vector<Element> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t");
            const auto last = cell.find_last_not_of(" \t");
            if (first == std::string::npos) throw TableError(line_no, "empty cell");
            cell = cell.substr(first, last - first + 1);
            std::size_t pos = 0;
            unsigned long value = 0;
            try {
                value = std::stoul(cell, &pos);
            } catch (const std::exception&) {
                throw TableError(line_no, "invalid integer '" + cell + "'");
            }
            if (pos != cell.size() || cell.front() == '-') throw TableError(line_no, "invalid integer '" + cell + "'");
            row.push_back(static_cast<Element>(value));
        }
        if (!line.empty() && line.back() == ',') throw TableError(line_no, "empty cell");
        if (!rows.empty() && row.size() != rows.front().size())
            throw TableError(line_no, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw TableError(0, "empty table");
    const std::size_t n = rows.size();
    if (rows.front().size() != n)
        throw TableError(1, "table is not square: " + std::to_string(n) + " rows of " + std::to_string(rows.front().size()) + " entries");
    std::vector<Element> table;
    table.reserve(n * n);
    for (const auto& row : rows) table.insert(table.end(), row.begin(), row.end());
    return group_from_table(n, std::move(table));
}

FiniteGroup read_cayley_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TableError(0, "cannot open table file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_cayley_csv(buffer.str());
}

namespace {
void check_element(const FiniteGroup& group, Element a) {
    if (a >= group.order()) throw std::out_of_range("element index " + std::to_string(a) + " out of range");
}
}  // namespace

std::size_t element_order(const FiniteGroup& group, Element a) {
    check_element(group, a);
    return group.element_orders()[a];
}

std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element a) {
    check_element(group, a);
    std::vector<Element> powers{group.identity()};
    for (Element p = a; p != group.identity(); p = group.multiply(p, a)) powers.push_back(p);
    std::sort(powers.begin(), powers.end());
    return powers;
}

std::vector<Element> generators_of_cyclic(const FiniteGroup& group, Element a) {
    check_element(group, a);
    const std::size_t d = group.element_orders()[a];
    std::vector<Element> gens;
    Element p = a;
    for (std::size_t k = 1; k <= d; ++k, p = group.multiply(p, a))
        if (std::gcd(k, d) == 1) gens.push_back(p);
    std::sort(gens.begin(), gens.end());
    return gens;
}

bool is_cyclic(const FiniteGroup& group) {
    const auto orders = group.element_orders();
    return std::find(orders.begin(), orders.end(), group.order()) != orders.end();
}

bool is_generalized_quaternion(const FiniteGroup& group) {
    const std::size_t n = group.order();
    if (n < 8 || (n & (n - 1)) != 0 || is_cyclic(group)) return false;
    const auto orders = group.element_orders();
    return std::count(orders.begin(), orders.end(), std::size_t{2}) == 1;
}

bool CyclicSubgroupPoset::properly_contains(std::size_t larger, std::size_t smaller) const {
    const auto& big = subgroups.at(larger);
    const auto& small = subgroups.at(smaller);
    return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

CyclicSubgroupPoset cyclic_subgroup_poset(const FiniteGroup& group) {
    std::map<std::vector<Element>, Element> unique;
    for (Element a = 0; a < group.order(); ++a) unique.emplace(cyclic_subgroup(group, a), a);  // first insert keeps smallest a

    CyclicSubgroupPoset poset;
    for (auto& [elements, rep] : unique) {
        poset.subgroups.push_back(elements);
        poset.representatives.push_back(rep);
    }
    std::vector<std::size_t> perm(poset.subgroups.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        const auto& a = poset.subgroups[x];
        const auto& b = poset.subgroups[y];
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    CyclicSubgroupPoset sorted;
    for (std::size_t i : perm) {
        sorted.subgroups.push_back(std::move(poset.subgroups[i]));
        sorted.representatives.push_back(poset.representatives[i]);
    }
    for (std::size_t s = 0; s < sorted.size(); ++s)
        for (std::size_t t = 0; t < sorted.size(); ++t)
            if (sorted.properly_contains(t, s)) sorted.inclusion.emplace_back(s, t);
    return sorted;
}

}  // namespace epg
