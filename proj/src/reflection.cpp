#include "ew/reflection.hpp"

#include <climits>
#include <stdexcept>
#include <string>

namespace ew {

namespace {

std::size_t slot_of(GroupKind kind, Gen g) {
    const auto gens = generators(kind);
    for (std::size_t s = 0; s < gens.size(); ++s)
        if (gens[s] == g) return s;
    throw std::invalid_argument(std::string("generator ") + std::string(gen_name(g)) +
                                " is not a generator of " + std::string(kind_name(kind)));
}

Word central_word(GroupKind kind) {
    if (kind == GroupKind::A11Star)
        return {Gen::R0, Gen::R1, Gen::R1p, Gen::R0, Gen::R1, Gen::R1p};
    return {Gen::R0, Gen::R0p, Gen::R1, Gen::R1p};
}

// The central matrix C translates one fundamental weight by a fixed multiple
// of eps, and C^k scales that translation by k: the probe entry of C^k is
// step * k.
struct CentralProbe {
    std::size_t row;  // eps coordinate
    std::size_t col;  // column of the probed weight
    long long step;
};

CentralProbe central_probe(GroupKind kind) {
    if (kind == GroupKind::A11Star) return {4, 0, 4};  // sigma^2(Lambda0) = Lambda0 + 4 eps
    return {5, 0, 2};                                  // sigma(LambdaSharp) = LambdaSharp + 2 eps
}

}  // namespace

const ExactMatrix& ReflectionSet::matrix(Gen g) const { return matrices_[slot_of(kind_, g)]; }

ReflectionSet build_reflections(const PairingTable& table) {
    ReflectionSet set;
    set.kind_ = table.kind();
    set.dim_ = table.dimension();
    const auto gens = generators(table.kind());
    set.matrices_.reserve(gens.size());
    for (Gen g : gens) {
        const ExactVector& root = table.simple_root(g);
        ExactMatrix m(set.dim_);
        for (std::size_t k = 0; k < set.dim_; ++k) {
            const Rational coeff(table.basis_pairing(k, g));
            for (std::size_t r = 0; r < set.dim_; ++r)
                m.at(r, k) = Rational(r == k ? 1 : 0) - coeff * root[r];
        }
        set.matrices_.push_back(std::move(m));
    }
    return set;
}

ExactMatrix word_to_matrix(const ReflectionSet& set, const Word& word) {
    ExactMatrix m = ExactMatrix::identity(set.dimension());
    for (Gen g : word) m = mat_mul(m, set.matrix(g));
    return m;
}

ExactMatrix inverse_word_matrix(const ReflectionSet& set, const Word& word) {
    Word rev(word.rbegin(), word.rend());
    return word_to_matrix(set, rev);
}

ExactMatrix central_matrix(const ReflectionSet& set) {
    return word_to_matrix(set, central_word(set.kind()));
}

std::optional<long long> central_power_of(const ReflectionSet& set, const ExactMatrix& m) {
    if (m.dim() != set.dimension()) return std::nullopt;
    const CentralProbe probe = central_probe(set.kind());
    const Rational& entry = m.at(probe.row, probe.col);
    if (!entry.is_integer() || entry.num() % probe.step != 0) return std::nullopt;
    const BigInt kBig = entry.num() / probe.step;
    if (kBig > LLONG_MAX || kBig < LLONG_MIN)
        throw std::runtime_error("central_power_of: power too large to verify");
    const long long k = kBig.convert_to<long long>();

    const Word cw = central_word(set.kind());
    const ExactMatrix step =
        k >= 0 ? word_to_matrix(set, cw) : inverse_word_matrix(set, cw);
    ExactMatrix p = ExactMatrix::identity(set.dimension());
    for (long long j = 0; j < (k >= 0 ? k : -k); ++j) p = mat_mul(p, step);
    if (p == m) return k;
    return std::nullopt;
}

std::optional<long long> central_power_between(const ReflectionSet& set, const Word& lhs,
                                               const Word& rhs) {
    return central_power_of(set, mat_mul(word_to_matrix(set, lhs), inverse_word_matrix(set, rhs)));
}

bool check_center(GroupKind kind) {
    const PairingTable table = build_pairing_table(kind);
    const ReflectionSet set = build_reflections(table);
    const ExactMatrix c = central_matrix(set);

    for (Gen g : generators(kind)) {
        const ExactMatrix& r = set.matrix(g);
        if (mat_mul(c, r) != mat_mul(r, c)) return false;
    }

    const ExactVector eps = table.eps();
    if (kind == GroupKind::A11Star) {
        const ExactVector l0 = table.basis_vector(table.basis_index("Lambda0"));
        const ExactVector l1 = table.basis_vector(table.basis_index("Lambda1"));
        if (mat_apply(c, l0) != l0 + Rational(4) * eps) return false;
        if (mat_apply(c, l1) != l1 - table.delta_prime()) return false;
        for (Gen g : generators(kind)) {
            const ExactVector& root = table.simple_root(g);
            if (mat_apply(c, root) != root) return false;
        }
        if (mat_apply(c, table.delta()) != table.delta()) return false;
        if (mat_apply(c, table.delta_prime()) != table.delta_prime()) return false;
        if (mat_apply(c, eps) != eps) return false;
    } else {
        const ExactVector ls = table.basis_vector(table.basis_index("LambdaSharp"));
        const ExactVector l0 = table.basis_vector(table.basis_index("Lambda0"));
        const ExactVector l1 = table.basis_vector(table.basis_index("Lambda1"));
        const ExactVector shift = table.delta() - eps;
        if (mat_apply(c, ls) != ls + Rational(2) * eps) return false;
        if (mat_apply(c, l0) != l0 - shift) return false;
        if (mat_apply(c, l1) != l1 - shift) return false;
        const ExactVector& a1 = table.simple_root(Gen::R1);
        if (mat_apply(c, a1) != a1) return false;
    }
    return true;
}

}  // namespace ew
