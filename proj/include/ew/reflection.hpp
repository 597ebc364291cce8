#pragma once

#include "ew/pairing.hpp"

#include <optional>

namespace ew {

// The generator matrices of the reflection representation. Each matrix acts
// on the fixed basis of the pairing table; column k is the image of the k-th
// basis vector under r_g(h) = h - <h, alpha_g^vee> alpha_g.
class ReflectionSet {
public:
    GroupKind kind() const { return kind_; }
    std::size_t dimension() const { return dim_; }
    const ExactMatrix& matrix(Gen g) const;  // throws for a generator outside the kind

private:
    friend ReflectionSet build_reflections(const PairingTable&);
    ReflectionSet() = default;

    GroupKind kind_ = GroupKind::A11Star;
    std::size_t dim_ = 0;
    std::vector<ExactMatrix> matrices_;  // indexed by generator slot
};

ReflectionSet build_reflections(const PairingTable& table);

// Product M(g1) * M(g2) * ... * M(gk); the empty word maps to the identity.
// Applied to vectors, the rightmost factor acts first.
ExactMatrix word_to_matrix(const ReflectionSet& set, const Word& word);

// Matrix of the inverse element; generators are involutions, so this is the
// reversed word.
ExactMatrix inverse_word_matrix(const ReflectionSet& set, const Word& word);

// Generator of the center of the unquotiented reflection group: the matrix
// of sigma^2 = (r0 r1 r1')^2 for A11Star, of sigma = r0 r0' r1 r1' for A11.
ExactMatrix central_matrix(const ReflectionSet& set);

// If m = central_matrix^k for some integer k, returns k. The central matrix
// is unipotent, so k can be read off a fixed translation entry and then
// confirmed by exact multiplication.
std::optional<long long> central_power_of(const ReflectionSet& set, const ExactMatrix& m);

// k such that M(lhs) = C^k M(rhs), when the two words differ by a central
// factor; nullopt otherwise.
std::optional<long long> central_power_between(const ReflectionSet& set, const Word& lhs,
                                               const Word& rhs);

// Certifies the center generator: commutes with every generator matrix and
// acts by the documented translations (Lambda0 -> Lambda0 + 4 eps,
// Lambda1 -> Lambda1 - delta', fixing every simple root, for A11Star;
// LambdaSharp -> LambdaSharp + 2 eps, Lambda_i -> Lambda_i - delta + eps,
// fixing alpha1, for A11).
bool check_center(GroupKind kind);

}  // namespace ew
