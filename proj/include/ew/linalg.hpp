#pragma once

#include "ew/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ew {

class ExactVector {
public:
    ExactVector() = default;
    explicit ExactVector(std::size_t dim) : coords_(dim) {}
    ExactVector(std::initializer_list<Rational> cs) : coords_(cs) {}

    std::size_t size() const { return coords_.size(); }
    Rational& operator[](std::size_t k) { return coords_[k]; }
    const Rational& operator[](std::size_t k) const { return coords_[k]; }

    friend bool operator==(const ExactVector&, const ExactVector&) = default;

private:
    std::vector<Rational> coords_;
};

ExactVector operator+(const ExactVector& a, const ExactVector& b);
ExactVector operator-(const ExactVector& a, const ExactVector& b);
ExactVector operator*(const Rational& c, const ExactVector& v);

// Square matrix over Rational, row-major dense storage. Dimensions in this
// project never exceed 6.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> entries_;
};

// All three throw std::invalid_argument on dimension mismatch.
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactVector mat_apply(const ExactMatrix& m, const ExactVector& v);
bool mat_eq(const ExactMatrix& a, const ExactMatrix& b);

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }
inline ExactVector operator*(const ExactMatrix& m, const ExactVector& v) { return mat_apply(m, v); }

}  // namespace ew
