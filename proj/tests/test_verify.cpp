#include "ew/verify.hpp"

#include <doctest.h>

using namespace ew;

TEST_CASE("relation catalogues are nonempty and kind-consistent") {
    for (GroupKind kind : {GroupKind::A11Star, GroupKind::A11}) {
        const auto rels = relation_catalogue(kind);
        CHECK(rels.size() > 20);
        for (const auto& rel : rels) {
            for (Gen g : rel.lhs) CHECK(has_generator(kind, g));
            for (Gen g : rel.rhs) CHECK(has_generator(kind, g));
        }
    }
}

TEST_CASE("full verification stack passes for both groups") {
    for (GroupKind kind : {GroupKind::A11Star, GroupKind::A11}) {
        for (const SuiteResult& suite : run_verification(kind, 8)) {
            INFO(std::string(kind_name(kind)), " / ", suite.name, ": ", suite.detail);
            CHECK(suite.passed);
        }
    }
}

TEST_CASE("law check samples at least one pair with equal normal forms") {
    // keeps the converse direction of the check non-vacuous
    for (GroupKind kind : {GroupKind::A11Star, GroupKind::A11}) {
        const LawCheckStats stats = multiplication_law_stats(kind, kLawCheckPairs, kLawCheckSeed);
        CHECK(stats.passed);
        CHECK(stats.pairs == kLawCheckPairs);
        CHECK(stats.equalPairs >= 1);
    }
}
