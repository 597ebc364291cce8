#include "ew/verify.hpp"

#include "ew/cayley.hpp"
#include "ew/normal_form.hpp"
#include "ew/reflection.hpp"
#include "ew/series.hpp"

#include <random>
#include <sstream>

namespace ew {

namespace {

Word repeat(const Word& w, int times) {
    Word out;
    for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// (g h)^n as a word; negative n uses (h g)^|n| since g, h are involutions.
Word pair_power(Gen g, Gen h, long long n) {
    const Word base = n >= 0 ? Word{g, h} : Word{h, g};
    return repeat(base, static_cast<int>(n >= 0 ? n : -n));
}

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Relation> catalogue_a11star() {
    using enum Gen;
    std::vector<Relation> rels;

    for (Gen g : {R0, R1, R1p})
        rels.push_back({"r" + std::string(gen_name(g)) + "^2 = 1", {g, g}, {}, 0});

    // r_i r_j r_k = r_k r_j r_i; the central power is +-1 according to
    // whether (i, j, k) is a cyclic rotation of (0, 1, 1').
    const std::vector<std::pair<Word, long long>> triples{
        {{R0, R1, R1p}, 1}, {{R1, R1p, R0}, 1}, {{R1p, R0, R1}, 1},
        {{R0, R1p, R1}, -1}, {{R1, R0, R1p}, -1}, {{R1p, R1, R0}, -1},
    };
    for (const auto& [w, k] : triples) {
        const Word rev(w.rbegin(), w.rend());
        rels.push_back({"reverse " + word_to_string(w), w, rev, k});
        rels.push_back({"(" + word_to_string(w) + ")^2 = 1", repeat(w, 2), {}, k});
    }

    // Six-fold equality of the squared triple products: the cyclic squares
    // agree exactly, and each anticyclic square is their exact inverse.
    const Word sq0 = repeat({R0, R1, R1p}, 2);
    rels.push_back({"(0 1 1')^2 = (1 1' 0)^2", sq0, repeat({R1, R1p, R0}, 2), 0});
    rels.push_back({"(0 1 1')^2 = (1' 0 1)^2", sq0, repeat({R1p, R0, R1}, 2), 0});
    rels.push_back({"(0 1 1')^2 (0 1' 1)^2 = 1", concat(sq0, repeat({R0, R1p, R1}, 2)), {}, 0});
    rels.push_back({"(0 1 1')^2 (1 0 1')^2 = 1", concat(sq0, repeat({R1, R0, R1p}, 2)), {}, 0});
    rels.push_back({"(0 1 1')^2 (1' 1 0)^2 = 1", concat(sq0, repeat({R1p, R1, R0}, 2)), {}, 0});

    rels.push_back({"a b = b a", {R0, R1, R0, R1p}, {R0, R1p, R0, R1}, -1});

    for (long long n = -5; n <= 5; ++n) {
        rels.push_back({"(1 1')^n = a^-n b^n, n=" + std::to_string(n),
                        pair_power(R1, R1p, n),
                        concat(pair_power(R0, R1, -n), pair_power(R0, R1p, n)),
                        -n * (n - 1) / 2});
        rels.push_back({"(1' 1)^n = a^n b^-n, n=" + std::to_string(n),
                        pair_power(R1p, R1, n),
                        concat(pair_power(R0, R1, n), pair_power(R0, R1p, -n)),
                        -n * (n + 1) / 2});
    }
    return rels;
}

std::vector<Relation> catalogue_a11() {
    using enum Gen;
    std::vector<Relation> rels;

    for (Gen g : {R0, R0p, R1, R1p})
        rels.push_back({"r" + std::string(gen_name(g)) + "^2 = 1", {g, g}, {}, 0});

    rels.push_back({"0 0' 1 1' = 1", {R0, R0p, R1, R1p}, {}, 1});
    rels.push_back({"0 0' = 1' 1", {R0, R0p}, {R1p, R1}, 1});
    rels.push_back({"0 1' = 0' 1", {R0, R1p}, {R0p, R1}, -1});
    rels.push_back({"1 = 0' 0 1'", {R1}, {R0p, R0, R1p}, 1});
    rels.push_back({"0 1 = (0 0')(0 1')", {R0, R1}, {R0, R0p, R0, R1p}, 1});
    rels.push_back({"a b = b a", {R0, R0p, R0, R1p}, {R0, R1p, R0, R0p}, -2});
    rels.push_back({"0' 1' = a^-1 b", {R0p, R1p}, {R0p, R0, R0, R1p}, 0});
    rels.push_back({"1' 0' = a b^-1", {R1p, R0p}, {R0, R0p, R1p, R0}, -2});

    for (long long n = -5; n <= 5; ++n) {
        rels.push_back({"(0 1)^n = a^n b^n, n=" + std::to_string(n),
                        pair_power(R0, R1, n),
                        concat(pair_power(R0, R0p, n), pair_power(R0, R1p, n)),
                        n * n});
        rels.push_back({"(1' 0')^n = a^n b^-n, n=" + std::to_string(n),
                        pair_power(R1p, R0p, n),
                        concat(pair_power(R0, R0p, n), pair_power(R0, R1p, -n)),
                        -n * (n + 1)});
    }
    return rels;
}

Word random_word(GroupKind kind, std::mt19937_64& rng) {
    const auto gens = generators(kind);
    const std::size_t len = static_cast<std::size_t>(rng() % 11);  // lengths 0..10
    Word w;
    w.reserve(len);
    for (std::size_t k = 0; k < len; ++k)
        w.push_back(gens[static_cast<std::size_t>(rng() % gens.size())]);
    return w;
}

}  // namespace

std::vector<Relation> relation_catalogue(GroupKind kind) {
    return kind == GroupKind::A11Star ? catalogue_a11star() : catalogue_a11();
}

SuiteResult check_matrix_relations(GroupKind kind) {
    SuiteResult result{"matrix-relations", false, ""};
    const PairingTable table = build_pairing_table(kind);
    const ReflectionSet set = build_reflections(table);
    const ExactMatrix id = ExactMatrix::identity(set.dimension());

    for (Gen g : generators(kind)) {
        const ExactMatrix& r = set.matrix(g);
        if (mat_mul(r, r) != id) {
            result.detail = "generator " + std::string(gen_name(g)) + " is not an involution";
            return result;
        }
        for (const ExactVector& fixed : {table.delta(), table.delta_prime(), table.eps()})
            if (mat_apply(r, fixed) != fixed) {
                result.detail = "generator " + std::string(gen_name(g)) +
                                " moves a class that must be fixed";
                return result;
            }
    }
    if (!check_center(kind)) {
        result.detail = "center action check failed";
        return result;
    }
    result.passed = true;
    result.detail = std::to_string(generators(kind).size()) + " involutions, center certified";
    return result;
}

SuiteResult check_presentation(GroupKind kind) {
    SuiteResult result{"presentation", false, ""};
    const ReflectionSet set = build_reflections(build_pairing_table(kind));

    for (const Relation& rel : relation_catalogue(kind)) {
        if (reduce_word(kind, rel.lhs) != reduce_word(kind, rel.rhs)) {
            result.detail = "normal forms differ for relation: " + rel.name;
            return result;
        }
        const auto power = central_power_between(set, rel.lhs, rel.rhs);
        if (!power.has_value() || *power != rel.centralPower) {
            result.detail = "matrix identity fails for relation: " + rel.name + " (expected C^" +
                            std::to_string(rel.centralPower) +
                            (power ? ", got C^" + std::to_string(*power) : ", got none") + ")";
            return result;
        }
    }
    result.passed = true;
    result.detail = std::to_string(relation_catalogue(kind).size()) + " relations certified";
    return result;
}

LawCheckStats multiplication_law_stats(GroupKind kind, int pairs, std::uint64_t seed) {
    LawCheckStats stats;
    stats.pairs = pairs;
    const ReflectionSet set = build_reflections(build_pairing_table(kind));
    std::mt19937_64 rng(seed);

    for (int t = 0; t < pairs; ++t) {
        const Word w1 = random_word(kind, rng);
        const Word w2 = random_word(kind, rng);
        const bool nfEqual = reduce_word(kind, w1) == reduce_word(kind, w2);
        const bool matEqual = central_power_between(set, w1, w2).has_value();
        if (nfEqual != matEqual) {
            stats.detail = "pair " + std::to_string(t) + ": \"" + word_to_string(w1) +
                           "\" vs \"" + word_to_string(w2) + "\": normal forms " +
                           (nfEqual ? "equal" : "differ") + " but matrices " +
                           (matEqual ? "central-equal" : "not central-equal");
            return stats;
        }
        if (nfEqual) ++stats.equalPairs;
    }
    stats.passed = true;
    stats.detail = std::to_string(pairs) + " pairs checked, " +
                   std::to_string(stats.equalPairs) + " with equal normal forms";
    return stats;
}

SuiteResult check_multiplication_law(GroupKind kind, int pairs, std::uint64_t seed) {
    const LawCheckStats stats = multiplication_law_stats(kind, pairs, seed);
    return {"multiplication-law", stats.passed, stats.detail};
}

SuiteResult check_length_formula(GroupKind kind, long long maxLen) {
    SuiteResult result{"length-formula-bfs", false, ""};
    const BfsReport report = bfs_lengths(kind, maxLen);
    if (!report.mismatches.empty()) {
        const auto& m = report.mismatches.front();
        result.detail = "element " + to_string(m.element) + ": BFS length " +
                        std::to_string(m.bfsLength) + ", formula " +
                        std::to_string(m.formulaLength);
        return result;
    }
    result.passed = true;
    result.detail = std::to_string(report.lengths.size()) + " elements agree through length " +
                    std::to_string(maxLen);
    return result;
}

SuiteResult check_sphere_counts(GroupKind kind, long long maxLen) {
    SuiteResult result{"sphere-counts", false, ""};
    const long long perLength = kind == GroupKind::A11Star ? 3 : 4;
    const BfsReport report = bfs_lengths(kind, maxLen);
    for (long long n = 0; n <= maxLen; ++n) {
        const long long expected = n == 0 ? 1 : perLength * n;
        const long long bfs = report.sphereSizes[static_cast<std::size_t>(n)];
        const long long scan = static_cast<long long>(sphere(kind, n).size());
        if (bfs != expected || scan != expected) {
            std::ostringstream os;
            os << "length " << n << ": expected " << expected << ", BFS " << bfs << ", scan "
               << scan;
            result.detail = os.str();
            return result;
        }
    }
    result.passed = true;
    result.detail = "counts match through length " + std::to_string(maxLen);
    return result;
}

SuiteResult check_series_cases(long long order) {
    SuiteResult result{"series-cases", false, ""};
    try {
        const auto cases = growth_series_cases(order);
        TruncatedSeries sum;
        sum.coeffs.assign(static_cast<std::size_t>(order) + 1, 0);
        for (const GrowthCase& c : cases)
            for (std::size_t k = 0; k < sum.coeffs.size(); ++k) sum.coeffs[k] += c.direct.coeffs[k];
        const TruncatedSeries closed = expand(growth_series_closed_form(GroupKind::A11Star), order);
        if (!series_eq(sum, closed)) {
            result.detail = "case sum disagrees with the growth series";
            return result;
        }
    } catch (const std::exception& e) {
        result.detail = e.what();
        return result;
    }
    result.passed = true;
    result.detail = "six cases agree with closed forms through q^" + std::to_string(order);
    return result;
}

std::vector<SuiteResult> run_verification(GroupKind kind, long long maxLen) {
    std::vector<SuiteResult> results;
    results.push_back(check_matrix_relations(kind));
    results.push_back(check_presentation(kind));
    results.push_back(check_multiplication_law(kind, kLawCheckPairs, kLawCheckSeed));
    results.push_back(check_length_formula(kind, maxLen));
    results.push_back(check_sphere_counts(kind, maxLen));
    if (kind == GroupKind::A11Star) results.push_back(check_series_cases(200));
    return results;
}

}  // namespace ew
