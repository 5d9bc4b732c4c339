#include <doctest.h>

#include <set>

#include "epg/catalog.hpp"
#include "epg/verify.hpp"
#include "oracles.hpp"

TEST_CASE("default catalog contents") {
    const auto all = epg::default_catalog(48);
    CHECK(all.size() >= 40);
    std::set<std::string> names;
    for (const auto& e : all) {
        CHECK(e.order <= 48);
        CHECK(names.insert(e.name).second);
    }
    for (const char* n : {"C1", "C48", "D4", "D48", "Q8", "Q16", "Q32", "S3", "S4", "C2xC2", "C2xC4", "C2xC6", "C3xC3", "C2xC2xC3"})
        CHECK_MESSAGE(names.count(n) == 1, n);

    const std::vector<std::string> q{"q"};
    const auto qs = epg::default_catalog(32, q);
    REQUIRE(qs.size() == 3);
    CHECK(qs[0].name == "Q8");
    CHECK(qs[2].name == "Q32");

    CHECK(epg::default_catalog(1).size() == 1);
    const std::vector<std::string> bad{"banana"};
    CHECK_THROWS_AS(epg::default_catalog(10, bad), std::invalid_argument);
}

TEST_CASE("catalog flags agree with brute force") {
    for (const auto& e : epg::default_catalog(48)) {
        const auto g = epg::make_group(e.spec);
        CHECK(g.order() == e.order);
        bool cyclic = false;
        for (epg::Element a = 0; a < g.order(); ++a) cyclic = cyclic || oracle::order_of(g, a) == g.order();
        CHECK_MESSAGE(cyclic == e.known.cyclic, e.name);
        CHECK_MESSAGE(oracle::eppo(g) == e.known.eppo, e.name);
    }
}

TEST_CASE("verification passes on a small catalog and covers every check") {
    const auto results = epg::verify_catalog(epg::default_catalog(16));
    std::set<std::string> seen;
    for (const auto& r : results) {
        const auto* failure = r.first_failure();
        CHECK_MESSAGE(r.passed(), r.name << ": " << (failure ? failure->name + " " + failure->detail : ""));
        for (const auto& c : r.checks) seen.insert(c.name);
    }
    for (const auto& name : epg::verification_check_names()) CHECK_MESSAGE(seen.count(name) == 1, name);
}

TEST_CASE("verification results follow catalog order") {
    const auto catalog = epg::default_catalog(12);
    const auto results = epg::verify_catalog(catalog);
    REQUIRE(results.size() == catalog.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) CHECK(results[i].name == catalog[i].name);
}

TEST_CASE("verification flags a wrong catalog fact") {
    auto entry = epg::default_catalog(8).back();
    entry.known.cyclic = !entry.known.cyclic;
    const auto r = epg::verify_entry(entry);
    CHECK_FALSE(r.passed());
    REQUIRE(r.find("known-cyclic") != nullptr);
    CHECK_FALSE(r.find("known-cyclic")->passed);
}
