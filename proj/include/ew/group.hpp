#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ew {

// The two elliptic Weyl group flavours handled by this library. A11Star is
// presented on three involutive generators, A11 on four.
enum class GroupKind : std::uint8_t { A11Star, A11 };

// Generator symbols; A11Star uses {R0, R1, R1p}, A11 uses all four.
enum class Gen : std::uint8_t { R0, R0p, R1, R1p };

using Word = std::vector<Gen>;

// Generators of a kind in canonical order: (0, 1, 1') resp. (0, 0', 1, 1').
std::span<const Gen> generators(GroupKind kind);

bool has_generator(GroupKind kind, Gen g);

std::string_view gen_name(Gen g);        // "0", "0'", "1", "1'"
std::string_view kind_name(GroupKind);   // "a11star", "a11"

// Dimension of the reflection representation: 5 for A11Star, 6 for A11.
std::size_t rep_dimension(GroupKind);

std::string word_to_string(const Word& w);  // space-separated generator names

}  // namespace ew
