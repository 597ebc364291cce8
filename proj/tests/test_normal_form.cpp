#include "ew/normal_form.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ew;

namespace {

constexpr GroupKind kStar = GroupKind::A11Star;
constexpr GroupKind kA11 = GroupKind::A11;

NormalForm nf(GroupKind kind, int i, long long m, long long n) { return {kind, i, m, n}; }

Word pair_power(Gen g, Gen h, long long n) {
    Word out;
    const Word base = n >= 0 ? Word{g, h} : Word{h, g};
    for (long long t = 0; t < (n >= 0 ? n : -n); ++t)
        out.insert(out.end(), base.begin(), base.end());
    return out;
}

}  // namespace

TEST_CASE("generator embeddings") {
    CHECK(nf_generator(kStar, Gen::R0) == nf(kStar, 1, 0, 0));
    CHECK(nf_generator(kStar, Gen::R1) == nf(kStar, 1, 1, 0));
    CHECK(nf_generator(kStar, Gen::R1p) == nf(kStar, 1, 0, 1));
    CHECK(nf_generator(kA11, Gen::R0) == nf(kA11, 1, 0, 0));
    CHECK(nf_generator(kA11, Gen::R0p) == nf(kA11, 1, 1, 0));
    CHECK(nf_generator(kA11, Gen::R1p) == nf(kA11, 1, 0, 1));
    CHECK(nf_generator(kA11, Gen::R1) == nf(kA11, 1, 1, 1));
    CHECK_THROWS_AS(nf_generator(kStar, Gen::R0p), std::invalid_argument);
}

TEST_CASE("multiplication law") {
    // translations add
    CHECK(nf_multiply(nf(kStar, 0, 2, -1), nf(kStar, 0, 3, 5)) == nf(kStar, 0, 5, 4));
    // r1 * r1' = a^-1 b
    CHECK(nf_multiply(nf_generator(kStar, Gen::R1), nf_generator(kStar, Gen::R1p)) ==
          nf(kStar, 0, -1, 1));
    // r1' * r1 = r0 * r0'
    CHECK(nf_multiply(nf_generator(kA11, Gen::R1p), nf_generator(kA11, Gen::R1)) ==
          nf(kA11, 0, 1, 0));
    CHECK(nf_multiply(nf_generator(kA11, Gen::R0), nf_generator(kA11, Gen::R0p)) ==
          nf(kA11, 0, 1, 0));
    CHECK_THROWS_AS(nf_multiply(nf_identity(kStar), nf_identity(kA11)), std::invalid_argument);
}

TEST_CASE("inversion") {
    CHECK(nf_invert(nf(kStar, 0, 3, -2)) == nf(kStar, 0, -3, 2));
    CHECK(nf_invert(nf(kStar, 1, 5, 7)) == nf(kStar, 1, 5, 7));
    CHECK(nf_invert(nf_identity(kA11)) == nf_identity(kA11));
    // (1, m, n) really is an involution under the product law
    const NormalForm x = nf(kStar, 1, 5, 7);
    CHECK(nf_multiply(x, nf_invert(x)) == nf_identity(kStar));
    CHECK(nf_multiply(x, x) == nf_identity(kStar));
}

TEST_CASE("length case table") {
    CHECK(nf_length(nf(kStar, 0, 2, -1)) == 4);
    CHECK(nf_length(nf(kStar, 1, 0, 0)) == 1);
    CHECK(nf_length(nf(kStar, 0, 0, 0)) == 0);
    CHECK(nf_length(nf(kStar, 0, 2, 3)) == 10);
    CHECK(nf_length(nf(kStar, 0, -2, -3)) == 10);
    CHECK(nf_length(nf(kStar, 1, 2, 3)) == 9);
    CHECK(nf_length(nf(kStar, 1, -2, -3)) == 11);
    CHECK(nf_length(nf(kStar, 1, 3, -1)) == 5);
    CHECK(nf_length(nf(kStar, 1, 1, -3)) == 7);
    CHECK(nf_length(nf(kStar, 1, 0, 2)) == 3);
    CHECK(nf_length(nf(kStar, 1, -2, 0)) == 5);

    CHECK(nf_length(nf(kA11, 1, 2, 2)) == 3);
    CHECK(nf_length(nf(kA11, 0, -3, 1)) == 6);
    CHECK(nf_length(nf(kA11, 0, 0, 0)) == 0);
    CHECK(nf_length(nf(kA11, 1, 0, 0)) == 1);
    CHECK(nf_length(nf(kA11, 1, -1, 1)) == 3);
    CHECK(nf_length(nf(kA11, 1, 2, -2)) == 5);
}

TEST_CASE("reduce_word basics and frozen fixtures") {
    CHECK(reduce_word(kStar, {}) == nf_identity(kStar));
    // the squared Coxeter word reduces to the identity of W_F
    CHECK(reduce_word(kStar, {Gen::R0, Gen::R1, Gen::R1p, Gen::R0, Gen::R1, Gen::R1p}) ==
          nf_identity(kStar));
    // the Coxeter word itself
    CHECK(reduce_word(kStar, {Gen::R0, Gen::R1, Gen::R1p}) == nf(kStar, 1, -1, 1));
    // defining relation of the A11 presentation
    CHECK(reduce_word(kA11, {Gen::R0, Gen::R0p, Gen::R1, Gen::R1p}) == nf_identity(kA11));
    CHECK_THROWS_AS(reduce_word(kStar, {Gen::R0p}), std::invalid_argument);
}

TEST_CASE("group axioms on a box of normal forms") {
    for (GroupKind kind : {kStar, kA11}) {
        std::vector<NormalForm> small;
        for (int i = 0; i <= 1; ++i)
            for (long long m = -3; m <= 3; ++m)
                for (long long n = -3; n <= 3; ++n) small.push_back(nf(kind, i, m, n));

        for (const auto& x : small)
            for (const auto& y : small)
                for (const auto& z : small)
                    if (nf_multiply(nf_multiply(x, y), z) != nf_multiply(x, nf_multiply(y, z)))
                        FAIL("associativity fails at ", to_string(x), " ", to_string(y), " ",
                             to_string(z));

        for (int i = 0; i <= 1; ++i)
            for (long long m = -6; m <= 6; ++m)
                for (long long n = -6; n <= 6; ++n) {
                    const NormalForm x = nf(kind, i, m, n);
                    CHECK(nf_multiply(x, nf_invert(x)) == nf_identity(kind));
                    CHECK(nf_multiply(nf_invert(x), x) == nf_identity(kind));
                }
    }
}

TEST_CASE("relations hold at the normal-form level") {
    // involutions
    for (Gen g : generators(kStar)) CHECK(reduce_word(kStar, {g, g}) == nf_identity(kStar));
    for (Gen g : generators(kA11)) CHECK(reduce_word(kA11, {g, g}) == nf_identity(kA11));

    // r_i r_j r_k = r_k r_j r_i for all triples, and the squared triple
    // products all reduce to the identity
    const auto gens = generators(kStar);
    for (Gen a : gens)
        for (Gen b : gens)
            for (Gen c : gens) {
                CHECK(reduce_word(kStar, {a, b, c}) == reduce_word(kStar, {c, b, a}));
                CHECK(reduce_word(kStar, {a, b, c, a, b, c}) ==
                      reduce_word(kStar, {gens[0], gens[1], gens[2], gens[0], gens[1], gens[2]}));
            }

    // A11 consequences of the defining relation
    CHECK(reduce_word(kA11, {Gen::R0, Gen::R0p}) == reduce_word(kA11, {Gen::R1p, Gen::R1}));
    CHECK(reduce_word(kA11, {Gen::R0, Gen::R1p}) == reduce_word(kA11, {Gen::R0p, Gen::R1}));
    CHECK(reduce_word(kA11, {Gen::R1}) == reduce_word(kA11, {Gen::R0p, Gen::R0, Gen::R1p}));
    CHECK(reduce_word(kA11, {Gen::R0, Gen::R1}) ==
          reduce_word(kA11, {Gen::R0, Gen::R0p, Gen::R0, Gen::R1p}));
    CHECK(reduce_word(kA11, {Gen::R0p, Gen::R1p}) ==
          reduce_word(kA11, {Gen::R0p, Gen::R0, Gen::R0, Gen::R1p}));
    CHECK(reduce_word(kA11, {Gen::R1p, Gen::R0p}) ==
          reduce_word(kA11, {Gen::R0, Gen::R0p, Gen::R1p, Gen::R0}));
}

TEST_CASE("power identities of the translation pairs") {
    for (long long n = -5; n <= 5; ++n) {
        CHECK(reduce_word(kStar, pair_power(Gen::R1, Gen::R1p, n)) == nf(kStar, 0, -n, n));
        CHECK(reduce_word(kStar, pair_power(Gen::R1p, Gen::R1, n)) == nf(kStar, 0, n, -n));
        CHECK(reduce_word(kA11, pair_power(Gen::R0, Gen::R1, n)) == nf(kA11, 0, n, n));
        CHECK(reduce_word(kA11, pair_power(Gen::R1p, Gen::R0p, n)) == nf(kA11, 0, n, -n));
    }
}

TEST_CASE("length symmetry, sub-additivity, and generator steps") {
    for (GroupKind kind : {kStar, kA11}) {
        for (int i = 0; i <= 1; ++i)
            for (long long m = -8; m <= 8; ++m)
                for (long long n = -8; n <= 8; ++n)
                    CHECK(nf_length(nf(kind, i, m, n)) == nf_length(nf_invert(nf(kind, i, m, n))));

        std::vector<NormalForm> box;
        for (int i = 0; i <= 1; ++i)
            for (long long m = -4; m <= 4; ++m)
                for (long long n = -4; n <= 4; ++n) box.push_back(nf(kind, i, m, n));
        for (const auto& x : box)
            for (const auto& y : box)
                if (nf_length(nf_multiply(x, y)) > nf_length(x) + nf_length(y))
                    FAIL("sub-additivity fails at ", to_string(x), " * ", to_string(y));

        for (int i = 0; i <= 1; ++i)
            for (long long m = -6; m <= 6; ++m)
                for (long long n = -6; n <= 6; ++n)
                    for (Gen g : generators(kind)) {
                        const NormalForm x = nf(kind, i, m, n);
                        const long long diff =
                            nf_length(nf_multiply(x, nf_generator(kind, g))) - nf_length(x);
                        CHECK((diff == 1 || diff == -1));
                    }
    }
}

TEST_CASE("sphere enumeration") {
    CHECK(sphere(kStar, 0).size() == 1);
    CHECK(sphere(kStar, 0).front() == nf_identity(kStar));
    CHECK(sphere(kStar, 5).size() == 15);
    CHECK(sphere(kA11, 3).size() == 12);
    CHECK(sphere(kA11, 0).size() == 1);

    const auto s = sphere(kStar, 4);
    CHECK(s.size() == 12);
    CHECK(std::is_sorted(s.begin(), s.end(), [](const NormalForm& a, const NormalForm& b) {
        return std::tuple(a.i, a.m, a.n) < std::tuple(b.i, b.m, b.n);
    }));
    for (const auto& x : s) CHECK(nf_length(x) == 4);
}
