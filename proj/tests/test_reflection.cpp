#include "ew/reflection.hpp"

#include <doctest.h>

#include <array>

using namespace ew;

namespace {

const PairingTable& star_table() {
    static const PairingTable t = build_pairing_table(GroupKind::A11Star);
    return t;
}

const PairingTable& a11_table() {
    static const PairingTable t = build_pairing_table(GroupKind::A11);
    return t;
}

const ReflectionSet& star_set() {
    static const ReflectionSet s = build_reflections(star_table());
    return s;
}

const ReflectionSet& a11_set() {
    static const ReflectionSet s = build_reflections(a11_table());
    return s;
}

ExactVector unit(const PairingTable& t, std::string_view name) {
    return t.basis_vector(t.basis_index(name));
}

}  // namespace

TEST_CASE("A11Star Cartan matrix") {
    const auto& t = star_table();
    const std::array<Gen, 3> gens{Gen::R0, Gen::R1, Gen::R1p};
    const long long expected[3][3] = {{2, -1, -1}, {-4, 2, 2}, {-4, 2, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(t.cartan(gens[static_cast<std::size_t>(i)],
                           gens[static_cast<std::size_t>(j)]) == expected[i][j]);
    CHECK(t.dimension() == 5);
}

TEST_CASE("A11 Cartan matrix") {
    const auto& t = a11_table();
    // Rows and columns in the display order (0, 1, 0', 1').
    const std::array<Gen, 4> order{Gen::R0, Gen::R1, Gen::R0p, Gen::R1p};
    const long long expected[4][4] = {
        {2, -2, 2, -2}, {-2, 2, -2, 2}, {2, -2, 2, -2}, {-2, 2, -2, 2}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(t.cartan(order[static_cast<std::size_t>(i)],
                           order[static_cast<std::size_t>(j)]) == expected[i][j]);
    CHECK(t.dimension() == 6);
}

TEST_CASE("pairing table spot values") {
    CHECK(star_table().basis_pairing(star_table().basis_index("alpha1"), Gen::R0) == -1);
    CHECK(star_table().basis_pairing(star_table().basis_index("eps"), Gen::R1) == 0);
    CHECK(a11_table().basis_pairing(a11_table().basis_index("Lambda0"), Gen::R1p) == -1);
    CHECK(a11_table().basis_pairing(a11_table().basis_index("Lambda1"), Gen::R0p) == -1);
    CHECK(a11_table().basis_pairing(a11_table().basis_index("LambdaSharp"), Gen::R0) == 1);
    // delta and eps pair to zero with every coroot, in both kinds
    for (Gen g : generators(GroupKind::A11Star)) {
        CHECK(star_table().basis_pairing(star_table().basis_index("delta"), g) == 0);
        CHECK(star_table().basis_pairing(star_table().basis_index("eps"), g) == 0);
    }
    for (Gen g : generators(GroupKind::A11))
        CHECK(a11_table().basis_pairing(a11_table().basis_index("eps"), g) == 0);
}

TEST_CASE("pairing table rejects foreign generators") {
    CHECK_THROWS_AS(star_table().simple_root(Gen::R0p), std::invalid_argument);
    CHECK_THROWS_AS(star_table().cartan(Gen::R0, Gen::R0p), std::invalid_argument);
}

TEST_CASE("reflections act as expected on weights") {
    const auto& t = star_table();
    const auto& s = star_set();
    const ExactVector lambda1 = unit(t, "Lambda1");
    const ExactVector alpha1 = unit(t, "alpha1");

    CHECK(mat_apply(s.matrix(Gen::R1), lambda1) == lambda1 - alpha1);
    CHECK(mat_apply(s.matrix(Gen::R0), lambda1) == lambda1);
    CHECK(mat_apply(s.matrix(Gen::R1), alpha1) == -Rational(1) * alpha1);
    CHECK(mat_apply(s.matrix(Gen::R0), t.delta()) == t.delta());
    CHECK(mat_apply(s.matrix(Gen::R1p), t.eps()) == t.eps());

    const auto& ta = a11_table();
    const ExactVector lambdaSharp = unit(ta, "LambdaSharp");
    const ExactVector a1 = unit(ta, "alpha1");
    CHECK(mat_apply(a11_set().matrix(Gen::R1p), lambdaSharp) == lambdaSharp - a1 + ta.eps());
}

TEST_CASE("every generator matrix is an involution fixing delta and eps") {
    for (GroupKind kind : {GroupKind::A11Star, GroupKind::A11}) {
        const PairingTable t = build_pairing_table(kind);
        const ReflectionSet s = build_reflections(t);
        const ExactMatrix id = ExactMatrix::identity(s.dimension());
        for (Gen g : generators(kind)) {
            CHECK(mat_mul(s.matrix(g), s.matrix(g)) == id);
            CHECK(mat_apply(s.matrix(g), t.delta()) == t.delta());
            CHECK(mat_apply(s.matrix(g), t.delta_prime()) == t.delta_prime());
            CHECK(mat_apply(s.matrix(g), t.eps()) == t.eps());
        }
    }
}

TEST_CASE("word_to_matrix basics") {
    const auto& s = star_set();
    CHECK(word_to_matrix(s, {}) == ExactMatrix::identity(5));
    CHECK(word_to_matrix(s, {Gen::R0, Gen::R0}) == ExactMatrix::identity(5));
    CHECK_THROWS_AS(word_to_matrix(s, {Gen::R0p}), std::invalid_argument);

    const auto& ta = a11_table();
    const ExactMatrix sigma = word_to_matrix(a11_set(), {Gen::R0, Gen::R0p, Gen::R1, Gen::R1p});
    const ExactVector lambdaSharp = unit(ta, "LambdaSharp");
    CHECK(mat_apply(sigma, lambdaSharp) == lambdaSharp + Rational(2) * ta.eps());
}

TEST_CASE("squared Coxeter word matches its hand-computed matrix") {
    // sigma^2 translates Lambda0 by 4 eps and Lambda1 by -delta', and fixes
    // alpha1, delta, eps; written out on the basis
    // (Lambda0, Lambda1, alpha1, delta, eps):
    const long long fixture[5][5] = {
        {1, 0, 0, 0, 0},
        {0, 1, 0, 0, 0},
        {0, 0, 1, 0, 0},
        {0, -1, 0, 1, 0},
        {4, 2, 0, 0, 1},
    };
    const Word w{Gen::R0, Gen::R1, Gen::R1p, Gen::R0, Gen::R1, Gen::R1p};
    const ExactMatrix sigma2 = word_to_matrix(star_set(), w);
    ExactMatrix expected(5);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) expected.at(r, c) = fixture[r][c];
    CHECK(mat_eq(sigma2, expected));
    CHECK(central_matrix(star_set()) == expected);
    CHECK_FALSE(mat_eq(sigma2, ExactMatrix::identity(5)));
    CHECK_FALSE(mat_eq(ExactMatrix::identity(5), star_set().matrix(Gen::R0)));
}

TEST_CASE("six-fold equality of the squared triple products") {
    const auto& s = star_set();
    const Word cyc[3] = {{Gen::R0, Gen::R1, Gen::R1p},
                         {Gen::R1, Gen::R1p, Gen::R0},
                         {Gen::R1p, Gen::R0, Gen::R1}};
    const Word anti[3] = {{Gen::R0, Gen::R1p, Gen::R1},
                          {Gen::R1, Gen::R0, Gen::R1p},
                          {Gen::R1p, Gen::R1, Gen::R0}};
    const auto square = [&](const Word& w) {
        Word ww = w;
        ww.insert(ww.end(), w.begin(), w.end());
        return word_to_matrix(s, ww);
    };
    const ExactMatrix first = square(cyc[0]);
    for (const Word& w : cyc) CHECK(square(w) == first);
    for (const Word& w : anti) {
        Word ww = w;
        ww.insert(ww.end(), w.begin(), w.end());
        // the anticyclic squares are the exact inverses of the cyclic ones
        CHECK(mat_mul(first, word_to_matrix(s, ww)) == ExactMatrix::identity(5));
    }
}

TEST_CASE("commutation identities of the translation pairs") {
    const auto& s = star_set();
    const ExactMatrix ab =
        word_to_matrix(s, {Gen::R0, Gen::R1, Gen::R0, Gen::R1p});
    const ExactMatrix ba =
        word_to_matrix(s, {Gen::R0, Gen::R1p, Gen::R0, Gen::R1});
    // equal only modulo the center before quotienting
    CHECK(ab != ba);
    const auto k = central_power_between(s, {Gen::R0, Gen::R1, Gen::R0, Gen::R1p},
                                         {Gen::R0, Gen::R1p, Gen::R0, Gen::R1});
    REQUIRE(k.has_value());
    CHECK(*k == -1);

    const auto& sa = a11_set();
    const auto k25a = central_power_between(sa, {Gen::R0, Gen::R0p}, {Gen::R1p, Gen::R1});
    REQUIRE(k25a.has_value());
    CHECK(*k25a == 1);
    const auto k25b = central_power_between(sa, {Gen::R0, Gen::R1p}, {Gen::R0p, Gen::R1});
    REQUIRE(k25b.has_value());
    CHECK(*k25b == -1);
}

TEST_CASE("center certification") {
    CHECK(check_center(GroupKind::A11Star));
    CHECK(check_center(GroupKind::A11));
}

TEST_CASE("central_power_of recognizes powers and rejects non-central matrices") {
    for (GroupKind kind : {GroupKind::A11Star, GroupKind::A11}) {
        const ReflectionSet s = build_reflections(build_pairing_table(kind));
        const ExactMatrix c = central_matrix(s);
        ExactMatrix p = ExactMatrix::identity(s.dimension());
        for (long long k = 0; k <= 3; ++k) {
            const auto found = central_power_of(s, p);
            REQUIRE(found.has_value());
            CHECK(*found == k);
            p = mat_mul(p, c);
        }
        CHECK_FALSE(central_power_of(s, s.matrix(Gen::R0)).has_value());

        // negative powers via the inverse word
        Word cw = kind == GroupKind::A11Star
                      ? Word{Gen::R0, Gen::R1, Gen::R1p, Gen::R0, Gen::R1, Gen::R1p}
                      : Word{Gen::R0, Gen::R0p, Gen::R1, Gen::R1p};
        const ExactMatrix cinv = inverse_word_matrix(s, cw);
        const auto negOne = central_power_of(s, cinv);
        REQUIRE(negOne.has_value());
        CHECK(*negOne == -1);
    }
}
