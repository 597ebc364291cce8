#include "ew/pairing.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ew {

namespace {

constexpr std::array<std::string_view, 5> kBasisStar{"Lambda0", "Lambda1", "alpha1",
                                                     "delta", "eps"};
constexpr std::array<std::string_view, 6> kBasisA11{"LambdaSharp", "Lambda0", "Lambda1",
                                                    "alpha0", "alpha1", "eps"};

ExactVector make_vec(std::initializer_list<long long> cs) {
    ExactVector v(cs.size());
    std::size_t k = 0;
    for (long long c : cs) v[k++] = c;
    return v;
}

}  // namespace

std::size_t PairingTable::gen_slot(Gen g) const {
    const auto gens = generators(kind_);
    for (std::size_t s = 0; s < gens.size(); ++s)
        if (gens[s] == g) return s;
    throw std::invalid_argument(std::string("generator ") + std::string(gen_name(g)) +
                                " is not a generator of " + std::string(kind_name(kind_)));
}

long long PairingTable::cartan(Gen i, Gen j) const {
    return cartan_[gen_slot(i) * genCount_ + gen_slot(j)];
}

long long PairingTable::basis_pairing(std::size_t k, Gen g) const {
    if (k >= dim_) throw std::out_of_range("basis_pairing: basis index out of range");
    return pair_[k * genCount_ + gen_slot(g)];
}

const ExactVector& PairingTable::simple_root(Gen g) const { return roots_[gen_slot(g)]; }

std::span<const std::string_view> PairingTable::basis_names() const {
    if (kind_ == GroupKind::A11Star) return kBasisStar;
    return kBasisA11;
}

std::size_t PairingTable::basis_index(std::string_view name) const {
    const auto names = basis_names();
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return k;
    throw std::invalid_argument("unknown basis vector name: " + std::string(name));
}

ExactVector PairingTable::basis_vector(std::size_t k) const {
    if (k >= dim_) throw std::out_of_range("basis_vector: index out of range");
    ExactVector v(dim_);
    v[k] = 1;
    return v;
}

ExactVector PairingTable::delta() const { return delta_; }

ExactVector PairingTable::delta_prime() const { return delta_ - (Rational(2) * eps_); }

ExactVector PairingTable::eps() const { return eps_; }

PairingTable build_pairing_table(GroupKind kind) {
    PairingTable t;
    t.kind_ = kind;
    t.dim_ = rep_dimension(kind);
    t.genCount_ = generators(kind).size();

    if (kind == GroupKind::A11Star) {
        // <alpha_i^vee, alpha_j>, generator order (0, 1, 1')
        t.cartan_ = {
            2, -1, -1,
            -4, 2, 2,
            -4, 2, 2,
        };
        // <basis_k, alpha_i^vee>: fundamental weights pair to delta_{ij};
        // delta and eps pair to zero with every coroot.
        t.pair_ = {
            1, 0, 0,   // Lambda0
            0, 1, 0,   // Lambda1
            -1, 2, 2,  // alpha1  (Cartan column)
            0, 0, 0,   // delta
            0, 0, 0,   // eps
        };
        // alpha0 = delta - 2*alpha1, alpha1' = alpha1 - eps
        t.roots_ = {
            make_vec({0, 0, -2, 1, 0}),
            make_vec({0, 0, 1, 0, 0}),
            make_vec({0, 0, 1, 0, -1}),
        };
        t.delta_ = make_vec({0, 0, 0, 1, 0});
        t.eps_ = make_vec({0, 0, 0, 0, 1});
    } else {
        // <alpha_i^vee, alpha_j>, generator order (0, 0', 1, 1'); the primed
        // columns repeat the unprimed ones because alpha_j' = alpha_j - eps
        // and eps pairs to zero.
        t.cartan_ = {
            2, 2, -2, -2,
            2, 2, -2, -2,
            -2, -2, 2, 2,
            -2, -2, 2, 2,
        };
        // <basis_k, alpha_i^vee>: LambdaSharp pairs to 1 with every coroot,
        // <Lambda_i, alpha_j^vee> = delta_{ij} and
        // <Lambda_i, alpha_{j'}^vee> = -delta_{i,1-j} for i, j in {0, 1}.
        t.pair_ = {
            1, 1, 1, 1,     // LambdaSharp
            1, 0, 0, -1,    // Lambda0
            0, -1, 1, 0,    // Lambda1
            2, 2, -2, -2,   // alpha0  (Cartan column)
            -2, -2, 2, 2,   // alpha1  (Cartan column)
            0, 0, 0, 0,     // eps
        };
        t.roots_ = {
            make_vec({0, 0, 0, 1, 0, 0}),
            make_vec({0, 0, 0, 1, 0, -1}),
            make_vec({0, 0, 0, 0, 1, 0}),
            make_vec({0, 0, 0, 0, 1, -1}),
        };
        t.delta_ = make_vec({0, 0, 0, 1, 1, 0});
        t.eps_ = make_vec({0, 0, 0, 0, 0, 1});
    }
    return t;
}

}  // namespace ew
