#pragma once

#include "qhflow/rational.hpp"

#include <optional>
#include <vector>

namespace qhflow {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    // Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(size_t rows, const std::vector<Vector>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vector column(size_t j) const;
    Vector apply(const Vector& v) const;
    Matrix hconcat(const Matrix& o) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Echelon {
    Matrix reduced;               // reduced row echelon form
    std::vector<size_t> pivots;   // pivot column of each nonzero row
    size_t rank() const { return pivots.size(); }
};

// Fraction-free (Bareiss) elimination with pivots taken in column order,
// followed by exact back substitution into reduced form.
Echelon row_reduce(const Matrix& m);
size_t rank(const Matrix& m);

// Solution with every non-pivot variable set to zero; nullopt if inconsistent.
std::optional<Vector> solve_pivot(const Matrix& a, const Vector& b);

std::vector<Vector> nullspace(const Matrix& m);

}  // namespace qhflow
