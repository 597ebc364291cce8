#include "ew/linalg.hpp"

#include <stdexcept>
#include <string>

namespace ew {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch: " +
                                    std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    require_same_size(a.size(), b.size(), "vector add");
    ExactVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    require_same_size(a.size(), b.size(), "vector sub");
    ExactVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

ExactVector operator*(const Rational& c, const ExactVector& v) {
    ExactVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = c * v[k];
    return out;
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m.at(k, k) = 1;
    return m;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_size(a.dim(), b.dim(), "mat_mul");
    const std::size_t n = a.dim();
    ExactMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Rational acc;
            for (std::size_t k = 0; k < n; ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

ExactVector mat_apply(const ExactMatrix& m, const ExactVector& v) {
    require_same_size(m.dim(), v.size(), "mat_apply");
    const std::size_t n = m.dim();
    ExactVector out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Rational acc;
        for (std::size_t k = 0; k < n; ++k) acc += m.at(r, k) * v[k];
        out[r] = acc;
    }
    return out;
}

bool mat_eq(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_size(a.dim(), b.dim(), "mat_eq");
    return a == b;
}

}  // namespace ew
