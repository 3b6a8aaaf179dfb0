#include "qhflow/structure.hpp"

#include <gtest/gtest.h>

using namespace qhflow;

TEST(H1, SimpleFactors) {
    EXPECT_TRUE(check_h1(parse_polynomial("x^4/4 - y^3/3"), QHType(3, 4)));
    EXPECT_TRUE(check_h1(parse_polynomial("(x^4+y^4)/4"), QHType(1, 1)));
    EXPECT_TRUE(check_h1(parse_polynomial("x*y"), QHType(1, 1)));
    EXPECT_FALSE(check_h1(parse_polynomial("x^2*y"), QHType(1, 1)));
    EXPECT_FALSE(check_h1(parse_polynomial("(x^2+y^2)^2"), QHType(1, 1)));
    EXPECT_FALSE(check_h1(parse_polynomial("(x-y)^2*(x+y)"), QHType(1, 1)));
    EXPECT_FALSE(check_h1(parse_polynomial("(x^2-y)^2"), QHType(1, 2)));
}

TEST(UnivariateReduction, RoundTrip) {
    for (auto [s, t] : std::vector<std::pair<const char*, QHType>>{{"x^4/4 - y^3/3", QHType(3, 4)},
                                                                  {"x^3*y - x*y^3", QHType(1, 1)},
                                                                  {"x^2*(x^4 - y^2)", QHType(1, 2)}}) {
        Polynomial h = parse_polynomial(s);
        EXPECT_EQ(reconstruct(univariate_reduction(h, t), t), h) << s;
    }
}

TEST(H2, KnownMembers) {
    auto c = check_h2(parse_polynomial("x^4/4 - y^3/3"), QHType(3, 4));
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.checked, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 10}));
    EXPECT_TRUE(check_h2(parse_polynomial("(x^4+y^4)/4"), QHType(1, 1)).ok);
    EXPECT_TRUE(check_h2(parse_polynomial("-x^4/4 - y^2/2"), QHType(1, 2)).ok);
}

TEST(Monodromy, Catalog) {
    EXPECT_TRUE(is_monodromic(parse_polynomial("(x^4+y^4)/4"), QHType(1, 1)).monodromic);
    EXPECT_FALSE(is_monodromic(parse_polynomial("x^4/4 - y^3/3"), QHType(3, 4)).monodromic);
    EXPECT_FALSE(is_monodromic(parse_polynomial("x*y"), QHType(1, 1)).monodromic);
    auto lc = is_monodromic(parse_polynomial("(x^2+y^2)/2"), QHType(1, 1));
    EXPECT_TRUE(lc.monodromic);
    EXPECT_EQ(lc.sign, 1);
    auto neg = is_monodromic(parse_polynomial("-x^4/4 - y^2/2"), QHType(1, 2));
    EXPECT_TRUE(neg.monodromic);
    EXPECT_EQ(neg.sign, -1);
    // x^2 + y^2 has complex factors only but x^2 - y^2 does not
    EXPECT_FALSE(is_monodromic(parse_polynomial("x^2 - y^2"), QHType(1, 1)).monodromic);
}

TEST(Monodromy, NilpotentFamily) {
    for (int n = 1; n <= 5; ++n)
        for (int sigma : {-1, 1}) {
            Polynomial h = Polynomial::monomial(n + 1, 0, Rational(2 * sigma)) - Polynomial::monomial(0, 2, Rational(n + 1));
            QHType t = (n % 2 == 1) ? QHType(1, (n + 1) / 2) : QHType(2, n + 1);
            EXPECT_EQ(is_monodromic(h, t).monodromic, n % 2 == 1 && sigma == -1) << "n=" << n << " sigma=" << sigma;
        }
}

TEST(N0, GapFormula) {
    EXPECT_EQ(compute_n0(QHType(3, 4), 5), 11);
    EXPECT_EQ(compute_n0(QHType(1, 1), 2), 3);
    EXPECT_EQ(compute_n0(QHType(2, 3), 1), 3);
}

TEST(Hypotheses, Report) {
    auto rep = check_hypotheses(parse_polynomial("x^4/4 - y^3/3"), QHType(3, 4));
    EXPECT_TRUE(rep.h1);
    EXPECT_TRUE(rep.h2);
    EXPECT_FALSE(rep.monodromic);
    EXPECT_EQ(rep.n0, 11);
    auto bad = check_hypotheses(parse_polynomial("x^2*y"), QHType(1, 1));
    EXPECT_FALSE(bad.h1);
}
