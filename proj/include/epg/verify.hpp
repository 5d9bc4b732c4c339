#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "epg/catalog.hpp"

namespace epg {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample when failed
};

/// Every invariant of the pipeline evaluated on one group.
struct GroupVerification {
    std::string name;
    std::size_t order = 0;
    std::vector<CheckResult> checks;

    std::size_t universal_count = 0;
    std::size_t identity_twin_count = 0;
    std::size_t formula_covered = 0;
    std::size_t added_edges = 0;
    std::string input_class;

    bool passed() const;
    const CheckResult* first_failure() const;
    const CheckResult* find(const std::string& check) const;
};

/// Runs group, graph, twin and reconstruction checks for one catalog entry.
GroupVerification verify_entry(const CatalogEntry& entry);

/// Entries are processed concurrently; results follow catalog order.
std::vector<GroupVerification> verify_catalog(const std::vector<CatalogEntry>& catalog);

/// Names of every check verify_entry may emit, in emission order.
const std::vector<std::string>& verification_check_names();

}  // namespace epg
