#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arithmaps/errors.hpp"
#include "arithmaps/field.hpp"

namespace arithmaps {

template <FieldElement F>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw BadCoefficients("entry count != rows*cols");
    }
    static Matrix filled(size_t rows, size_t cols, const F& v) {
        return Matrix(rows, cols, std::vector<F>(rows * cols, v));
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const F& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    F& at(size_t i, size_t j) { return e_[i * cols_ + j]; }

private:
    size_t rows_, cols_;
    std::vector<F> e_;
};

// Fraction-free Bareiss elimination. Every division is exact, which keeps
// rational and polynomial entries from blowing up the way plain Gaussian
// elimination does on the tau determinants.
template <FieldElement F>
F det(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw NonSquare();
    const size_t n = m.rows();
    if (n == 0) throw NonSquare();
    Matrix<F> w = m;
    const F one = w.at(0, 0).one();
    const F zero = w.at(0, 0).zero();
    F prev = one;
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && w.at(piv, k).is_zero()) ++piv;
        if (piv == n) return zero;
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = zero;
        }
        prev = w.at(k, k);
    }
    F d = w.at(n - 1, n - 1);
    return negate ? -d : d;
}

// Plain cofactor expansion along the first row; O(n!) and kept as the
// independent oracle for det().
template <FieldElement F>
F det_cofactor(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw NonSquare();
    const size_t n = m.rows();
    if (n == 0) throw NonSquare();
    if (n == 1) return m.at(0, 0);
    const F zero = m.at(0, 0).zero();
    F acc = zero;
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<F> sub;
        sub.reserve((n - 1) * (n - 1));
        for (size_t i = 1; i < n; ++i)
            for (size_t c = 0; c < n; ++c)
                if (c != j) sub.push_back(m.at(i, c));
        F term = m.at(0, j) * det_cofactor(Matrix<F>(n - 1, n - 1, std::move(sub)));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace arithmaps
