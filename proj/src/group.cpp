#include "ew/group.hpp"

#include <array>

namespace ew {

namespace {
constexpr std::array<Gen, 3> kGensStar{Gen::R0, Gen::R1, Gen::R1p};
constexpr std::array<Gen, 4> kGensA11{Gen::R0, Gen::R0p, Gen::R1, Gen::R1p};
}  // namespace

std::span<const Gen> generators(GroupKind kind) {
    if (kind == GroupKind::A11Star) return kGensStar;
    return kGensA11;
}

bool has_generator(GroupKind kind, Gen g) {
    return kind == GroupKind::A11 || g != Gen::R0p;
}

std::string_view gen_name(Gen g) {
    switch (g) {
        case Gen::R0: return "0";
        case Gen::R0p: return "0'";
        case Gen::R1: return "1";
        case Gen::R1p: return "1'";
    }
    return "?";
}

std::string_view kind_name(GroupKind kind) {
    return kind == GroupKind::A11Star ? "a11star" : "a11";
}

std::size_t rep_dimension(GroupKind kind) {
    return kind == GroupKind::A11Star ? 5 : 6;
}

std::string word_to_string(const Word& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += gen_name(w[k]);
    }
    return out;
}

}  // namespace ew
