#include "qhflow/polynomial.hpp"
#include "qhflow/errors.hpp"
#include "support/random_systems.hpp"

#include <gtest/gtest.h>

using namespace qhflow;
using qhflow::testing::Gen;

TEST(Polynomial, ParseAndPrintRoundTrip) {
    Polynomial p = parse_polynomial("x^4/4 - y^3/3 + 2*x*y - 7");
    EXPECT_EQ(p.coeff(4, 0), Rational(1, 4));
    EXPECT_EQ(p.coeff(0, 3), Rational(-1, 3));
    EXPECT_EQ(p.coeff(1, 1), Rational(2));
    EXPECT_EQ(p.constant_term(), Rational(-7));
    EXPECT_EQ(parse_polynomial(p.str()), p);
    EXPECT_EQ(parse_polynomial("(x+y)^2"), parse_polynomial("x^2 + 2*x*y + y^2"));
    EXPECT_EQ(parse_polynomial("-(x - 1)*y"), parse_polynomial("y - x*y"));
    EXPECT_EQ(parse_polynomial("3/4 x y^2"), Polynomial::monomial(1, 2, Rational(3, 4)));
}

TEST(Polynomial, ParseErrors) {
    for (const char* bad : {"x^", "x +", "z", "(x", "x^-1", "x/y", "1/0"})
        EXPECT_THROW(parse_polynomial(bad), ParseError) << bad;
}

TEST(Polynomial, ExponentCapThrowsInputTooLarge) {
    EXPECT_THROW(parse_polynomial("x^100000"), InputTooLarge);
    Polynomial x = Polynomial::x();
    EXPECT_THROW(x.pow(Polynomial::exponent_cap() + 1), InputTooLarge);
}

TEST(Polynomial, RingAxiomsOnRandomInstances) {
    Gen g(11);
    for (int n = 0; n < 100; ++n) {
        Polynomial a = g.poly(0, 4, 5), b = g.poly(0, 4, 5), c = g.poly(0, 3, 4);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_TRUE((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) ASSERT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
    }
}

TEST(Polynomial, DerivativesFollowLeibnizAndChainRules) {
    Gen g(12);
    for (int n = 0; n < 100; ++n) {
        Polynomial a = g.poly(0, 5, 5), b = g.poly(0, 5, 5);
        ASSERT_EQ((a * b).dx(), a.dx() * b + a * b.dx());
        ASSERT_EQ((a * b).dy(), a.dy() * b + a * b.dy());
        ASSERT_EQ(a.dx().dy(), a.dy().dx());
        Polynomial X = g.poly(0, 2, 3), Y = g.poly(0, 2, 3);
        Polynomial comp = a.compose(X, Y);
        ASSERT_EQ(comp.dx(), a.dx().compose(X, Y) * X.dx() + a.dy().compose(X, Y) * Y.dx());
    }
}

TEST(Polynomial, WeightedDegreesAndComponents) {
    Polynomial h = parse_polynomial("x^4/4 - y^3/3 + x^5");
    Weight w{3, 4};
    EXPECT_EQ(h.min_degree(w), 12);
    EXPECT_EQ(h.max_degree(w), 15);
    EXPECT_FALSE(h.is_homogeneous(w, 12));
    EXPECT_EQ(h.component(w, 12), parse_polynomial("x^4/4 - y^3/3"));
    EXPECT_EQ(h.truncate(w, 12), parse_polynomial("x^4/4 - y^3/3"));
    EXPECT_EQ(h.total_degree(), 5);
    EXPECT_FALSE(Polynomial().min_degree(w).has_value());
}

TEST(Polynomial, EvaluationAndScaling) {
    Polynomial p = parse_polynomial("x^2 - 3*x*y + 1/2");
    EXPECT_EQ(p.eval(Rational(2), Rational(1, 3)), Rational(5, 2));
    EXPECT_DOUBLE_EQ(p.eval(2.0, 1.0 / 3.0), 2.5);
    EXPECT_EQ(p.scale_vars(Rational(2), Rational(3)), parse_polynomial("4*x^2 - 18*x*y + 1/2"));
}

TEST(Polynomial, TruncatedProductMatchesFullProduct) {
    Gen g(13);
    for (int n = 0; n < 50; ++n) {
        Polynomial a = g.poly(0, 6, 6), b = g.poly(0, 6, 6);
        DegreeCap cap{{1, 2}, g.integer(0, 10)};
        ASSERT_EQ(multiply_truncated(a, b, cap), (a * b).truncate(cap));
    }
}

TEST(PlanarField, WedgeDivergenceAndHamiltonian) {
    Polynomial h = parse_polynomial("(x^4+y^4)/4");
    PlanarField xh = hamiltonian_field(h);
    EXPECT_EQ(xh.p, parse_polynomial("-y^3"));
    EXPECT_EQ(xh.q, parse_polynomial("x^3"));
    EXPECT_TRUE(divergence(xh).is_zero());
    EXPECT_TRUE(lie_derivative(xh, h).is_zero());
    PlanarField d0{Polynomial::x(), Polynomial::y()};
    EXPECT_EQ(wedge(d0, xh), Rational(4) * h);
    EXPECT_EQ(divergence(d0), Polynomial(2));
}
