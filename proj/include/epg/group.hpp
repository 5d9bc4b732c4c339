#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epg {

using Element = std::uint32_t;

/// Raised for malformed Cayley tables. `line()` is 1-based, 0 when the
/// problem is not tied to a single input line.
class TableError : public std::runtime_error {
public:
    TableError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Finite group stored as a full Cayley table. Element 0 is always the
/// identity. Construction validates closure, identity, the Latin-square
/// property and associativity, so every instance is a group.
class FiniteGroup {
public:
    /// `table` is row-major, table[i * n + j] = i * j. Element 0 must be
    /// the identity. `labels` may be empty, otherwise it needs n entries.
    FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return order_; }
    Element identity() const noexcept { return 0; }
    Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
    std::span<const Element> table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Element a) const { return labels_.at(a); }

    /// Orders of every element, computed once at construction.
    std::span<const std::size_t> element_orders() const noexcept { return orders_; }

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
    std::size_t order_;
    std::vector<Element> table_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> orders_;
};

enum class GroupFamily { cyclic, dihedral, generalized_quaternion, symmetric, direct_product, external_table };

/// Declarative description of a group. `parameter` is n for cyclic and
/// symmetric, the polygon size for dihedral (order 2n), and the exponent for
/// generalized quaternion (order 2^n). Direct products list their factors;
/// external tables name a CSV file.
struct GroupSpec {
    GroupFamily family = GroupFamily::cyclic;
    std::size_t parameter = 1;
    std::vector<GroupSpec> factors;
    std::filesystem::path table_path;

    static GroupSpec cyclic(std::size_t n) { return {GroupFamily::cyclic, n, {}, {}}; }
    static GroupSpec dihedral(std::size_t n) { return {GroupFamily::dihedral, n, {}, {}}; }
    static GroupSpec quaternion(std::size_t exponent) { return {GroupFamily::generalized_quaternion, exponent, {}, {}}; }
    static GroupSpec symmetric(std::size_t n) { return {GroupFamily::symmetric, n, {}, {}}; }
    static GroupSpec product(std::vector<GroupSpec> factors) { return {GroupFamily::direct_product, 0, std::move(factors), {}}; }
    static GroupSpec external(std::filesystem::path path) { return {GroupFamily::external_table, 0, {}, std::move(path)}; }

    /// Human readable name, e.g. "C6", "D12", "Q8", "S3", "C2xC6".
    std::string name() const;
};

/// Parses command-line tokens such as {"cyclic", "6"}, {"q", "3"} or
/// {"cyclic", "2", "x", "cyclic", "6"}. Throws std::invalid_argument.
GroupSpec parse_group_spec(std::span<const std::string> tokens);

/// Builds the group described by `spec`. Deterministic. Throws
/// std::invalid_argument for out-of-range parameters and TableError for bad
/// external tables.
FiniteGroup make_group(const GroupSpec& spec);

/// Direct product; element index is i + |A| * j for (a_i, b_j).
FiniteGroup direct_product(const FiniteGroup& first, const FiniteGroup& second);

/// Reads a Cayley table in CSV form. The identity is located automatically
/// and swapped to index 0; labels record the original 0-based indices.
FiniteGroup read_cayley_csv(const std::filesystem::path& path);
FiniteGroup parse_cayley_csv(const std::string& text);

/// Validates an arbitrary table (any identity position) and relabels it so
/// that the identity is element 0.
FiniteGroup group_from_table(std::size_t order, std::vector<Element> table);

std::size_t element_order(const FiniteGroup& group, Element a);

/// Sorted elements of the cyclic subgroup generated by a.
std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element a);

/// Sorted generators of <a>.
std::vector<Element> generators_of_cyclic(const FiniteGroup& group, Element a);

bool is_cyclic(const FiniteGroup& group);

/// 2-group of order >= 8 that is non-cyclic with a unique involution.
bool is_generalized_quaternion(const FiniteGroup& group);

/// All cyclic subgroups with the strict inclusion relation.
struct CyclicSubgroupPoset {
    /// Sorted by size, then lexicographically by element list.
    std::vector<std::vector<Element>> subgroups;
    /// Smallest element index generating each subgroup.
    std::vector<Element> representatives;
    /// (s, t) present iff subgroups[s] is a proper subset of subgroups[t].
    std::vector<std::pair<std::size_t, std::size_t>> inclusion;

    std::size_t size() const noexcept { return subgroups.size(); }
    bool properly_contains(std::size_t larger, std::size_t smaller) const;
};

CyclicSubgroupPoset cyclic_subgroup_poset(const FiniteGroup& group);

}  // namespace epg
