#pragma once

#include "ew/group.hpp"
#include "ew/linalg.hpp"

#include <span>
#include <string_view>

namespace ew {

// Cartan data and weight pairings of one group kind on a fixed ordered basis
// of the dual Cartan space:
//
//   A11Star: (Lambda0, Lambda1, alpha1, delta, eps)              dim 5
//   A11:     (LambdaSharp, Lambda0, Lambda1, alpha0, alpha1, eps) dim 6
//
// where delta = alpha0 + 2*alpha1 (A11Star) resp. alpha0 + alpha1 (A11),
// eps = alpha1 - alpha1' (A11Star) resp. alpha0 - alpha0' = alpha1 - alpha1'
// (A11), and delta' = delta - 2*eps. The primed simple roots are expressed
// through the defining quotient relation alpha_j' = alpha_j - eps. Every
// pairing is an integer in these coordinates.
class PairingTable {
public:
    GroupKind kind() const { return kind_; }
    std::size_t dimension() const { return dim_; }

    // <alpha_i^vee, alpha_j>
    long long cartan(Gen i, Gen j) const;

    // <basis_k, alpha_g^vee>
    long long basis_pairing(std::size_t k, Gen g) const;

    // Coordinates of the simple root alpha_g in the fixed basis.
    const ExactVector& simple_root(Gen g) const;

    std::span<const std::string_view> basis_names() const;
    std::size_t basis_index(std::string_view name) const;  // throws if unknown
    ExactVector basis_vector(std::size_t k) const;

    ExactVector delta() const;
    ExactVector delta_prime() const;  // delta - 2*eps
    ExactVector eps() const;

private:
    friend PairingTable build_pairing_table(GroupKind);
    PairingTable() = default;

    std::size_t gen_slot(Gen g) const;  // throws for a generator outside the kind

    GroupKind kind_ = GroupKind::A11Star;
    std::size_t dim_ = 0;
    std::size_t genCount_ = 0;
    std::vector<long long> cartan_;            // genCount x genCount, row-major
    std::vector<long long> pair_;              // dim x genCount, row-major
    std::vector<ExactVector> roots_;           // per generator slot
    ExactVector delta_, eps_;
};

PairingTable build_pairing_table(GroupKind kind);

}  // namespace ew
