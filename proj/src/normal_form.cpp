#include "ew/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace ew {

NormalForm nf_identity(GroupKind kind) { return {kind, 0, 0, 0}; }

NormalForm nf_generator(GroupKind kind, Gen g) {
    if (!has_generator(kind, g))
        throw std::invalid_argument(std::string("nf_generator: ") + std::string(gen_name(g)) +
                                    " is not a generator of " + std::string(kind_name(kind)));
    if (kind == GroupKind::A11Star) {
        switch (g) {
            case Gen::R0: return {kind, 1, 0, 0};
            case Gen::R1: return {kind, 1, 1, 0};   // r0 * a
            default: return {kind, 1, 0, 1};        // r0 * b
        }
    }
    switch (g) {
        case Gen::R0: return {kind, 1, 0, 0};
        case Gen::R0p: return {kind, 1, 1, 0};      // r0 * a
        case Gen::R1p: return {kind, 1, 0, 1};      // r0 * b
        default: return {kind, 1, 1, 1};            // r1 = r0 * a * b
    }
}

NormalForm nf_multiply(const NormalForm& x, const NormalForm& y) {
    if (x.kind != y.kind) throw std::invalid_argument("nf_multiply: group kind mismatch");
    const long long s = y.i ? -1 : 1;
    return {x.kind, x.i ^ y.i, s * x.m + y.m, s * x.n + y.n};
}

NormalForm nf_invert(const NormalForm& x) {
    if (x.i == 0) return {x.kind, 0, -x.m, -x.n};
    return x;  // r0 a^m b^n is an involution: conjugation by r0 inverts a, b
}

long long nf_length(const NormalForm& x) {
    const long long am = x.m < 0 ? -x.m : x.m;
    const long long an = x.n < 0 ? -x.n : x.n;
    const long long mx = std::max(am, an);
    const bool mixed = (x.m > 0 && x.n < 0) || (x.m < 0 && x.n > 0);

    if (x.kind == GroupKind::A11Star) {
        if (x.i == 0) return mixed ? 2 * mx : 2 * (am + an);
        if (!mixed) {
            if (x.m >= 0 && x.n >= 0 && (x.m != 0 || x.n != 0)) return 2 * (x.m + x.n) - 1;
            return 2 * (am + an) + 1;  // m, n <= 0, including the coordinates of r0 itself
        }
        return x.m + x.n > 0 ? 2 * mx - 1 : 2 * mx + 1;
    }

    if (x.i == 0) return 2 * mx;
    return x.m + x.n > 0 ? 2 * mx - 1 : 2 * mx + 1;
}

NormalForm reduce_word(GroupKind kind, const Word& word) {
    NormalForm acc = nf_identity(kind);
    for (Gen g : word) acc = nf_multiply(acc, nf_generator(kind, g));
    return acc;
}

std::vector<NormalForm> sphere(GroupKind kind, long long len) {
    if (len < 0) throw std::invalid_argument("sphere: negative length");
    std::vector<NormalForm> out;
    // Scan bound: every case of the length table gives
    // len >= 2*max(|m|, |n|) - 1, so max(|m|, |n|) <= len suffices.
    for (int i = 0; i <= 1; ++i)
        for (long long m = -len; m <= len; ++m)
            for (long long n = -len; n <= len; ++n) {
                const NormalForm x{kind, i, m, n};
                if (nf_length(x) == len) out.push_back(x);
            }
    return out;
}

std::size_t NormalFormHash::operator()(const NormalForm& x) const noexcept {
    std::size_t seed = std::hash<int>{}((static_cast<int>(x.kind) << 1) | x.i);
    const auto combine = [&seed](std::size_t v) {
        seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    };
    combine(std::hash<long long>{}(x.m));
    combine(std::hash<long long>{}(x.n));
    return seed;
}

std::string to_string(const NormalForm& x) {
    return "(" + std::to_string(x.i) + ", " + std::to_string(x.m) + ", " +
           std::to_string(x.n) + ")";
}

}  // namespace ew
