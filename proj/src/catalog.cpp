#include "epg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "epg/number_theory.hpp"

namespace epg {

namespace {

bool prime_power_or_one(std::size_t n) { return n == 1 || is_prime_power(n); }

CatalogEntry product_entry(std::vector<std::size_t> cyclic_orders, bool cyclic, bool eppo) {
    std::vector<GroupSpec> factors;
    std::size_t order = 1;
    for (std::size_t n : cyclic_orders) {
        factors.push_back(GroupSpec::cyclic(n));
        order *= n;
    }
    GroupSpec spec = GroupSpec::product(std::move(factors));
    KnownProperties known{cyclic, eppo, false, std::nullopt};
    if (!cyclic) known.universal_count = 1;
    return {spec.name(), "product", spec, order, known};
}

}  // namespace

std::string canonical_family(const std::string& name) {
    if (name == "cyclic" || name == "c" || name == "C") return "cyclic";
    if (name == "dihedral" || name == "d" || name == "D") return "dihedral";
    if (name == "q" || name == "Q" || name == "quaternion" || name == "generalized-quaternion") return "q";
    if (name == "symmetric" || name == "s" || name == "S") return "symmetric";
    if (name == "product" || name == "direct-product") return "product";
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<CatalogEntry> default_catalog(std::size_t max_order, std::span<const std::string> families) {
    std::vector<std::string> wanted;
    for (const auto& f : families) wanted.push_back(canonical_family(f));
    auto include = [&](const char* family) {
        return wanted.empty() || std::find(wanted.begin(), wanted.end(), family) != wanted.end();
    };

    std::vector<CatalogEntry> all;
    for (std::size_t n = 1; n <= 48; ++n) {
        const bool pp = prime_power_or_one(n);
        KnownProperties known{true, pp, false, pp ? n : 1 + euler_phi(n)};
        all.push_back({GroupSpec::cyclic(n).name(), "cyclic", GroupSpec::cyclic(n), n, known});
    }
    // D2 is the Klein four-group; D1 would duplicate C2.
    for (std::size_t n = 2; 2 * n <= 48; ++n) {
        KnownProperties known{false, is_prime_power(n), false, 1};
        all.push_back({GroupSpec::dihedral(n).name(), "dihedral", GroupSpec::dihedral(n), 2 * n, known});
    }
    for (std::size_t k = 3; k <= 5; ++k) {
        KnownProperties known{false, true, true, 2};
        all.push_back({GroupSpec::quaternion(k).name(), "q", GroupSpec::quaternion(k), std::size_t{1} << k, known});
    }
    all.push_back({"S3", "symmetric", GroupSpec::symmetric(3), 6, {false, true, false, 1}});
    all.push_back({"S4", "symmetric", GroupSpec::symmetric(4), 24, {false, true, false, 1}});
    all.push_back(product_entry({2, 2}, false, true));
    all.push_back(product_entry({2, 4}, false, true));
    all.push_back(product_entry({2, 6}, false, false));
    all.push_back(product_entry({3, 3}, false, true));
    all.push_back(product_entry({2, 2, 3}, false, false));

    std::vector<CatalogEntry> out;
    for (auto& e : all)
        if (e.order <= max_order && include(e.family.c_str())) out.push_back(std::move(e));
    return out;
}

}  // namespace epg
