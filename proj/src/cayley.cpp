#include "ew/cayley.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ew {

namespace {

std::size_t state_cap() {
    const char* env = std::getenv("ELLIPTIC_WEYL_MAX_STATES");
    if (env == nullptr) return 10'000'000;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return 10'000'000;
    return static_cast<std::size_t>(v);
}

bool nf_before(const NormalForm& a, const NormalForm& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
}

}  // namespace

BfsReport bfs_lengths(GroupKind kind, long long maxLen) {
    if (maxLen < 0) throw std::invalid_argument("bfs_lengths: maxLen must be >= 0");
    const std::size_t cap = state_cap();

    BfsReport report;
    report.kind = kind;
    report.maxLen = maxLen;
    report.sphereSizes.assign(static_cast<std::size_t>(maxLen) + 1, 0);

    std::vector<NormalForm> genNf;
    for (Gen g : generators(kind)) genNf.push_back(nf_generator(kind, g));

    std::vector<NormalForm> frontier{nf_identity(kind)};
    report.lengths.emplace(frontier.front(), 0);
    report.sphereSizes[0] = 1;

    for (long long depth = 0; depth < maxLen; ++depth) {
        std::vector<NormalForm> next;
        for (const NormalForm& x : frontier)
            for (const NormalForm& g : genNf) {
                NormalForm y = nf_multiply(x, g);
                if (report.lengths.emplace(y, depth + 1).second) {
                    if (report.lengths.size() > cap)
                        throw std::runtime_error(
                            "bfs_lengths: state cap exceeded; raise ELLIPTIC_WEYL_MAX_STATES");
                    next.push_back(y);
                }
            }
        report.sphereSizes[static_cast<std::size_t>(depth) + 1] =
            static_cast<long long>(next.size());
        frontier = std::move(next);
    }

    for (const auto& [x, depth] : report.lengths) {
        const long long formula = nf_length(x);
        if (formula != depth) report.mismatches.push_back({x, depth, formula});
    }
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const BfsReport::Mismatch& a, const BfsReport::Mismatch& b) {
                  if (a.bfsLength != b.bfsLength) return a.bfsLength < b.bfsLength;
                  return nf_before(a.element, b.element);
              });
    return report;
}

bool verify_length_formula(GroupKind kind, long long maxLen) {
    return bfs_lengths(kind, maxLen).mismatches.empty();
}

std::vector<CayleyEdge> dump_cayley(GroupKind kind, long long maxLen) {
    if (maxLen < 0) throw std::invalid_argument("dump_cayley: maxLen must be >= 0");
    std::vector<CayleyEdge> edges;
    if (maxLen == 0) return edges;

    const BfsReport report = bfs_lengths(kind, maxLen);
    std::vector<NormalForm> sources;
    for (const auto& [x, depth] : report.lengths)
        if (depth <= maxLen - 1) sources.push_back(x);
    std::sort(sources.begin(), sources.end(), nf_before);

    for (const NormalForm& x : sources)
        for (Gen g : generators(kind))
            edges.push_back({x, g, nf_multiply(x, nf_generator(kind, g))});
    return edges;
}

std::string format_edge(const CayleyEdge& e) {
    const auto triple = [](const NormalForm& x) {
        return std::to_string(x.i) + "," + std::to_string(x.m) + "," + std::to_string(x.n);
    };
    return triple(e.source) + "\t" + std::string(gen_name(e.gen)) + "\t" + triple(e.target);
}

Word geodesic_word(const BfsReport& report, const NormalForm& x) {
    const auto it = report.lengths.find(x);
    if (it == report.lengths.end())
        throw std::out_of_range("geodesic_word: element not visited by this BFS");

    Word reversed;
    NormalForm cur = x;
    long long len = it->second;
    while (len > 0) {
        bool stepped = false;
        for (Gen g : generators(report.kind)) {
            NormalForm y = nf_multiply(cur, nf_generator(report.kind, g));
            const auto yit = report.lengths.find(y);
            if (yit != report.lengths.end() && yit->second == len - 1) {
                reversed.push_back(g);
                cur = y;
                --len;
                stepped = true;
                break;
            }
        }
        if (!stepped)
            throw std::logic_error("geodesic_word: no length-decreasing step found");
    }
    return Word(reversed.rbegin(), reversed.rend());
}

}  // namespace ew
