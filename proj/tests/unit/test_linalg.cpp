#include "qhflow/linalg.hpp"
#include "support/random_systems.hpp"

#include <gtest/gtest.h>

using namespace qhflow;
using qhflow::testing::Gen;

namespace {

// Textbook rational Gauss elimination, the oracle for the fraction-free path.
size_t naive_rank(Matrix m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c) / m(r, c);
            for (size_t k = 0; k < m.cols(); ++k) m(i, k) = m(i, k) - f * m(r, k);
        }
        ++r;
    }
    return r;
}

Matrix random_matrix(Gen& g, size_t rows, size_t cols, int rank_hint) {
    // product of random factors gives controlled rank deficiency
    Matrix a(rows, rank_hint), b(rank_hint, cols), m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (int k = 0; k < rank_hint; ++k) a(i, k) = g.rational(6, 4);
    for (int k = 0; k < rank_hint; ++k)
        for (size_t j = 0; j < cols; ++j) b(k, j) = g.rational(6, 4);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            for (int k = 0; k < rank_hint; ++k) m(i, j) += a(i, k) * b(k, j);
    return m;
}

}  // namespace

TEST(Linalg, BareissRankMatchesNaiveElimination) {
    Gen g(21);
    for (int n = 0; n < 100; ++n) {
        size_t rows = g.integer(1, 7), cols = g.integer(1, 7);
        Matrix m = random_matrix(g, rows, cols, g.integer(1, 7));
        ASSERT_EQ(rank(m), naive_rank(m)) << "instance " << n;
    }
}

TEST(Linalg, ReducedEchelonForm) {
    Gen g(22);
    for (int n = 0; n < 100; ++n) {
        Matrix m = random_matrix(g, g.integer(1, 6), g.integer(1, 6), g.integer(1, 5));
        Echelon e = row_reduce(m);
        for (size_t r = 0; r < e.pivots.size(); ++r) {
            size_t c = e.pivots[r];
            ASSERT_TRUE(e.reduced(r, c).is_one());
            for (size_t i = 0; i < m.rows(); ++i)
                if (i != r) ASSERT_TRUE(e.reduced(i, c).is_zero());
            if (r > 0) ASSERT_LT(e.pivots[r - 1], c);
        }
        for (size_t i = e.rank(); i < m.rows(); ++i)
            for (size_t c = 0; c < m.cols(); ++c) ASSERT_TRUE(e.reduced(i, c).is_zero());
    }
}

TEST(Linalg, NullspaceAndSolve) {
    Gen g(23);
    for (int n = 0; n < 100; ++n) {
        Matrix m = random_matrix(g, g.integer(1, 6), g.integer(1, 6), g.integer(1, 5));
        auto ns = nullspace(m);
        ASSERT_EQ(ns.size() + rank(m), m.cols());
        for (const auto& v : ns)
            for (const auto& x : m.apply(v)) ASSERT_TRUE(x.is_zero());
        Vector z(m.cols());
        for (auto& x : z) x = g.rational();
        Vector b = m.apply(z);
        auto sol = solve_pivot(m, b);
        ASSERT_TRUE(sol.has_value());
        ASSERT_EQ(m.apply(*sol), b);
    }
}

TEST(Linalg, InconsistentSystemHasNoSolution) {
    Matrix m(2, 1);
    m(0, 0) = Rational(1);
    m(1, 0) = Rational(2);
    EXPECT_FALSE(solve_pivot(m, {Rational(1), Rational(3)}).has_value());
    EXPECT_TRUE(solve_pivot(m, {Rational(1), Rational(2)}).has_value());
}

TEST(Linalg, FreeVariablesAreZero) {
    Matrix m(1, 3);
    m(0, 0) = Rational(2);
    m(0, 1) = Rational(4);
    m(0, 2) = Rational(6);
    auto sol = solve_pivot(m, {Rational(8)});
    ASSERT_TRUE(sol);
    EXPECT_EQ((*sol)[0], Rational(4));
    EXPECT_TRUE((*sol)[1].is_zero());
    EXPECT_TRUE((*sol)[2].is_zero());
}
