#pragma once

#include "ew/group.hpp"
#include "ew/rational.hpp"

#include <string_view>
#include <vector>

namespace ew {

// Dense integer-coefficient polynomial in q; coeffs[k] is the q^k coefficient.
using Polynomial = std::vector<BigInt>;

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// Quotient of integer polynomials. Division happens only through power-series
// expansion, so the denominator must not vanish at q = 0.
struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;
};

// Sum over a common denominator; no reduction is attempted.
RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);

struct TruncatedSeries {
    std::vector<BigInt> coeffs;  // c0..cL
    long long order() const { return static_cast<long long>(coeffs.size()) - 1; }
};

// Exact coefficientwise comparison; throws std::invalid_argument on order
// mismatch.
bool series_eq(const TruncatedSeries& a, const TruncatedSeries& b);

// Maclaurin coefficients of f through q^order. Throws std::domain_error if
// denominator(0) = 0 or if any coefficient fails to be an integer.
TruncatedSeries expand(const RationalFunction& f, long long order);

// Closed form of the growth series sum_{w in W_F} q^{len(w)}:
// (1 - q^3)/(1 - q)^3 for A11Star, (1 + q)^2/(1 - q)^2 for A11.
RationalFunction growth_series_closed_form(GroupKind kind);

// prod_i (1 - q^{m_i + 1}) / (1 - q), returned unreduced.
RationalFunction finite_weyl_series(const std::vector<long long>& exponents);

// 1/(1-q)^r * prod_i (1 - q^{m_i + 1}) / (1 - q^{m_i}), expanded through
// q^order.
TruncatedSeries affine_weyl_series(const std::vector<long long>& exponents, long long order);

// One summand of the A11Star growth series, split by the parity bit and the
// sign pattern of (m, n). `direct` is the lattice sum over normal-form
// coordinates, truncated at q^order; `closed` is its closed form. The two
// routes are compared on construction and any mismatch throws
// std::logic_error.
struct GrowthCase {
    std::string_view name;
    RationalFunction closed;
    TruncatedSeries direct;
};

// The six summands, in the order: even length with m, n of equal sign, even
// with mixed signs, odd with m, n >= 0, odd with m, n <= 0, odd mixed with
// m + n > 0, odd mixed with m + n <= 0. Their sum is the full growth series.
std::vector<GrowthCase> growth_series_cases(long long order);

}  // namespace ew
