#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epg/group.hpp"

namespace epg {

/// Facts about a catalog group that follow from its family parameters, kept
/// separate from anything computed off the Cayley table.
struct KnownProperties {
    bool cyclic = false;
    bool eppo = false;  // every element has prime-power order (or is e)
    bool generalized_quaternion = false;
    std::optional<std::size_t> universal_count;
};

struct CatalogEntry {
    std::string name;
    std::string family;  // cyclic, dihedral, q, symmetric, product
    GroupSpec spec;
    std::size_t order = 0;
    KnownProperties known;
};

/// Canonical family name for a CLI alias ("c", "quaternion", ...). Throws
/// std::invalid_argument for unknown names.
std::string canonical_family(const std::string& name);

/// Default catalog restricted to groups of order <= max_order and, when
/// `families` is non-empty, to the listed families. Catalog order is fixed:
/// cyclic, dihedral, generalized quaternion, symmetric, direct products.
std::vector<CatalogEntry> default_catalog(std::size_t max_order, std::span<const std::string> families = {});

}  // namespace epg
