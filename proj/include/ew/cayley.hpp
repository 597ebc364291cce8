#pragma once

#include "ew/normal_form.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace ew {

// Result of a breadth-first enumeration of the Cayley graph of W_F (states
// are normal forms, edges are right multiplication by generators). Lengths
// are first-visit depths and are computed without consulting nf_length; the
// closed-form function enters only in the final mismatch comparison.
struct BfsReport {
    GroupKind kind = GroupKind::A11Star;
    long long maxLen = 0;
    std::unordered_map<NormalForm, long long, NormalFormHash> lengths;
    std::vector<long long> sphereSizes;  // indexed by length, 0..maxLen

    struct Mismatch {
        NormalForm element;
        long long bfsLength;
        long long formulaLength;
    };
    std::vector<Mismatch> mismatches;  // ordered by (bfsLength, i, m, n)
};

// BFS from the identity through depth maxLen. The visited-state count is
// capped by the ELLIPTIC_WEYL_MAX_STATES environment variable (default
// 10'000'000); exceeding the cap throws std::runtime_error.
BfsReport bfs_lengths(GroupKind kind, long long maxLen);

// True iff BFS depths and nf_length agree on the whole ball of radius maxLen.
bool verify_length_formula(GroupKind kind, long long maxLen);

struct CayleyEdge {
    NormalForm source;
    Gen gen;
    NormalForm target;
};

// Edges out of every element of length <= maxLen - 1, sources ordered by
// (i, m, n) ascending and generators in canonical order.
std::vector<CayleyEdge> dump_cayley(GroupKind kind, long long maxLen);

// "i,m,n<TAB>gen<TAB>i,m,n"
std::string format_edge(const CayleyEdge& e);

// A geodesic word for x, found by walking length-decreasing generator steps
// inside the report's ball. Throws std::out_of_range if x was not visited.
Word geodesic_word(const BfsReport& report, const NormalForm& x);

}  // namespace ew
