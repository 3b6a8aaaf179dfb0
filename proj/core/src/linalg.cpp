#include "qhflow/linalg.hpp"

#include "qhflow/errors.hpp"

#include <gmpxx.h>

namespace qhflow {

Matrix Matrix::from_columns(size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InternalError("column length mismatch");
        for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw InternalError("dimension mismatch in matrix apply");
    Vector r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::hconcat(const Matrix& o) const {
    if (o.rows_ != rows_) throw InternalError("row mismatch in hconcat");
    Matrix m(rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
}

Echelon row_reduce(const Matrix& m) {
    const size_t R = m.rows(), C = m.cols();
    // Clear denominators row by row so elimination runs over the integers.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        for (size_t j = 0; j < C; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }

    std::vector<size_t> pivots;
    mpz_class prev = 1;
    size_t row = 0;
    for (size_t c = 0; c < C && row < R; ++c) {
        size_t p = row;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[row]);
        for (size_t i = row + 1; i < R; ++i) {
            for (size_t j = c + 1; j < C; ++j) {
                mpz_class t = a[row][c] * a[i][j] - a[i][c] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[row][c];
        pivots.push_back(c);
        ++row;
    }

    Matrix out(R, C);
    for (size_t i = 0; i < R; ++i)
        for (size_t j = 0; j < C; ++j) out(i, j) = Rational(a[i][j]);
    // Back substitution to reduced form.
    for (size_t k = pivots.size(); k-- > 0;) {
        size_t c = pivots[k];
        Rational inv = out(k, c).inverse();
        for (size_t j = c; j < C; ++j) out(k, j) *= inv;
        for (size_t i = 0; i < k; ++i) {
            Rational f = out(i, c);
            if (f.is_zero()) continue;
            for (size_t j = c; j < C; ++j) out(i, j) -= f * out(k, j);
        }
    }
    return {std::move(out), std::move(pivots)};
}

size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Vector> solve_pivot(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw InternalError("rhs length mismatch");
    Matrix aug = a.hconcat(Matrix::from_columns(a.rows(), {b}));
    Echelon e = row_reduce(aug);
    Vector x(a.cols());
    for (size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == a.cols()) return std::nullopt;
        x[e.pivots[k]] = e.reduced(k, a.cols());
    }
    return x;
}

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qhflow
