#pragma once

#include "ew/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ew {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample on failure, brief stats otherwise
};

// One presentation relation: lhs = rhs holds in W_F, and as matrices
// M(lhs) = C^centralPower * M(rhs) in the unquotiented reflection group,
// where C is the central matrix. centralPower = 0 marks relations that hold
// exactly before quotienting.
struct Relation {
    std::string name;
    Word lhs;
    Word rhs;
    long long centralPower;
};

// Defining and derived relations of the presentation, including the power
// families with |n| <= 5.
std::vector<Relation> relation_catalogue(GroupKind kind);

// Involutivity, the fixed classes delta/delta'/eps, and the center action.
SuiteResult check_matrix_relations(GroupKind kind);

// Every catalogued relation as a normal-form equality and as a matrix
// identity up to its recorded central power.
SuiteResult check_presentation(GroupKind kind);

struct LawCheckStats {
    bool passed = false;
    int pairs = 0;
    int equalPairs = 0;  // pairs whose two words reduce to the same normal form
    std::string detail;
};

// Pseudo-random word pairs (fixed seed, lengths <= 10): two words reduce to
// the same normal form exactly when their matrices differ by a central power.
LawCheckStats multiplication_law_stats(GroupKind kind, int pairs, std::uint64_t seed);
SuiteResult check_multiplication_law(GroupKind kind, int pairs, std::uint64_t seed);

// BFS depths equal nf_length on the whole ball of radius maxLen.
SuiteResult check_length_formula(GroupKind kind, long long maxLen);

// BFS sphere sizes match the closed-form counts (3n resp. 4n) and the
// normal-form scan enumeration.
SuiteResult check_sphere_counts(GroupKind kind, long long maxLen);

// The six-case split of the A11Star growth series: lattice sums equal their
// closed forms and sum to the full series.
SuiteResult check_series_cases(long long order);

// The full stack in a fixed order; the series-case suite runs for A11Star
// only.
std::vector<SuiteResult> run_verification(GroupKind kind, long long maxLen);

inline constexpr std::uint64_t kLawCheckSeed = 20240817;
inline constexpr int kLawCheckPairs = 200;

}  // namespace ew
