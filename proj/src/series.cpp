#include "ew/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ew {

namespace {

Polynomial one_minus_q_pow(long long e) {
    Polynomial p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = 1;
    p[static_cast<std::size_t>(e)] = -1;
    return p;
}

void require_positive_exponents(const std::vector<long long>& exponents, const char* what) {
    if (exponents.empty())
        throw std::invalid_argument(std::string(what) + ": empty exponent list");
    for (long long m : exponents)
        if (m < 1) throw std::invalid_argument(std::string(what) + ": exponents must be >= 1");
}

}  // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    return {poly_add(poly_mul(a.numerator, b.denominator), poly_mul(b.numerator, a.denominator)),
            poly_mul(a.denominator, b.denominator)};
}

bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_eq: order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    return a.coeffs == b.coeffs;
}

TruncatedSeries expand(const RationalFunction& f, long long order) {
    if (order < 0) throw std::invalid_argument("expand: negative order");
    if (f.denominator.empty() || f.denominator[0] == 0)
        throw std::domain_error("expand: denominator vanishes at q = 0");

    const BigInt& d0 = f.denominator[0];
    TruncatedSeries s;
    s.coeffs.assign(static_cast<std::size_t>(order) + 1, 0);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(order); ++k) {
        BigInt acc = k < f.numerator.size() ? f.numerator[k] : BigInt(0);
        const std::size_t jmax = std::min(k, f.denominator.size() - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc -= f.denominator[j] * s.coeffs[k - j];
        if (acc % d0 != 0)
            throw std::domain_error("expand: non-integer series coefficient at q^" +
                                    std::to_string(k));
        s.coeffs[k] = acc / d0;
    }
    return s;
}

RationalFunction growth_series_closed_form(GroupKind kind) {
    if (kind == GroupKind::A11Star)
        return {{1, 0, 0, -1}, {1, -3, 3, -1}};  // (1 - q^3) / (1 - q)^3
    return {{1, 2, 1}, {1, -2, 1}};              // (1 + q)^2 / (1 - q)^2
}

RationalFunction finite_weyl_series(const std::vector<long long>& exponents) {
    require_positive_exponents(exponents, "finite_weyl_series");
    RationalFunction f{{1}, {1}};
    for (long long m : exponents) {
        f.numerator = poly_mul(f.numerator, one_minus_q_pow(m + 1));
        f.denominator = poly_mul(f.denominator, one_minus_q_pow(1));
    }
    return f;
}

TruncatedSeries affine_weyl_series(const std::vector<long long>& exponents, long long order) {
    require_positive_exponents(exponents, "affine_weyl_series");
    RationalFunction f{{1}, {1}};
    for (long long m : exponents) {
        f.numerator = poly_mul(f.numerator, one_minus_q_pow(m + 1));
        f.denominator = poly_mul(f.denominator, poly_mul(one_minus_q_pow(1), one_minus_q_pow(m)));
    }
    return expand(f, order);
}

std::vector<GrowthCase> growth_series_cases(long long order) {
    if (order < 0) throw std::invalid_argument("growth_series_cases: negative order");

    // Common denominator (1 - q^2)^2 for every closed form.
    const Polynomial den{1, 0, -2, 0, 1};
    std::vector<GrowthCase> cases{
        {"even_same_sign", {{1, 0, 2, 0, -1}, den}, {}},
        {"even_mixed_sign", {{0, 0, 2, 0, 2}, den}, {}},
        {"odd_both_nonneg", {{0, 2, 0, -1}, den}, {}},
        {"odd_both_nonpos", {{0, 1}, den}, {}},
        {"odd_mixed_pos_sum", {{0, 0, 0, 2}, den}, {}},
        {"odd_mixed_nonpos_sum", {{0, 0, 0, 2}, den}, {}},
    };
    for (GrowthCase& c : cases)
        c.direct.coeffs.assign(static_cast<std::size_t>(order) + 1, 0);

    const auto bump = [order](GrowthCase& c, long long e) {
        if (e <= order) ++c.direct.coeffs[static_cast<std::size_t>(e)];
    };

    // Every summand's exponent is >= max(|m|, |n|), so the scan box
    // |m|, |n| <= order is exhaustive.
    for (long long m = -order; m <= order; ++m)
        for (long long n = -order; n <= order; ++n) {
            const long long am = m < 0 ? -m : m;
            const long long an = n < 0 ? -n : n;
            const long long mx = std::max(am, an);
            const bool mixed = (m > 0 && n < 0) || (m < 0 && n > 0);

            if (!mixed)
                bump(cases[0], 2 * (am + an));
            else
                bump(cases[1], 2 * mx);

            if (!mixed && m >= 0 && n >= 0 && m + n > 0)
                bump(cases[2], 2 * (m + n) - 1);
            else if (!mixed && m <= 0 && n <= 0)
                bump(cases[3], 2 * (am + an) + 1);
            else if (mixed && m + n > 0)
                bump(cases[4], 2 * mx - 1);
            else
                bump(cases[5], 2 * mx + 1);
        }

    for (const GrowthCase& c : cases) {
        const TruncatedSeries fromClosed = expand(c.closed, order);
        if (!series_eq(c.direct, fromClosed))
            throw std::logic_error("growth_series_cases: lattice sum disagrees with closed form "
                                   "for case " + std::string(c.name));
    }
    return cases;
}

}  // namespace ew
