#pragma once

#include "ew/group.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ew {

// Canonical coordinates r0^i a^m b^n of an element of the elliptic Weyl
// group W_F, with the commuting translation pair
//
//   A11Star: a = r0 r1,   b = r0 r1'
//   A11:     a = r0 r0',  b = r0 r1'
//
// Conjugation by r0 inverts both a and b, so W_F is Z^2 semidirect Z/2 and
// (i, m, n) determines the element uniquely. The identity is (0, 0, 0).
struct NormalForm {
    GroupKind kind;
    int i;        // 0 or 1
    long long m;
    long long n;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm nf_identity(GroupKind kind);

// Generator embeddings: r0 -> (1,0,0) in both kinds; A11Star r1 -> (1,1,0),
// r1' -> (1,0,1); A11 r0' -> (1,1,0), r1' -> (1,0,1), r1 -> (1,1,1).
NormalForm nf_generator(GroupKind kind, Gen g);  // throws for a generator outside the kind

// (i_x, m_x, n_x) * (i_y, m_y, n_y)
//   = (i_x xor i_y, (-1)^{i_y} m_x + m_y, (-1)^{i_y} n_x + n_y).
NormalForm nf_multiply(const NormalForm& x, const NormalForm& y);  // throws on kind mismatch

NormalForm nf_invert(const NormalForm& x);

// Word length of x in the generators, by the closed-form case table.
long long nf_length(const NormalForm& x);

NormalForm reduce_word(GroupKind kind, const Word& word);

// All elements of the given word length, ordered by (i, m, n) ascending.
std::vector<NormalForm> sphere(GroupKind kind, long long len);

struct NormalFormHash {
    std::size_t operator()(const NormalForm& x) const noexcept;
};

std::string to_string(const NormalForm& x);  // "(i, m, n)"

}  // namespace ew
