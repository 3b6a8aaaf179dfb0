#include "qhflow/orbit.hpp"
#include "qhflow/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace qhflow;

namespace {

double beta(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

const TrigTable& quartic() {
    static const TrigTable t = generalized_trig(parse_polynomial("(x^4+y^4)/4"), QHType(1, 1), 1e-10);
    return t;
}

}  // namespace

TEST(Trig, LinearCenterIsCosineSine) {
    TrigTable t = generalized_trig(parse_polynomial("(x^2+y^2)/2"), QHType(1, 1), 1e-11);
    EXPECT_NEAR(t.period, 2 * M_PI, 1e-9);
    for (const auto& s : t.samples) {
        EXPECT_NEAR(s.cs, std::cos(s.theta), 1e-8);
        EXPECT_NEAR(s.sn, std::sin(s.theta), 1e-8);
    }
}

TEST(Trig, QuarticPeriodIsBeta) {
    EXPECT_NEAR(quartic().period, beta(0.25, 0.25), 1e-8);
    EXPECT_LT(quartic().max_level_defect, 1e-9);
    EXPECT_LT(quartic().closure_error, 1e-8);
}

TEST(Trig, RequiresPositiveDefinite) {
    EXPECT_THROW(generalized_trig(parse_polynomial("x*y"), QHType(1, 1)), PreconditionError);
    EXPECT_THROW(generalized_trig(parse_polynomial("-(x^4+y^4)/4"), QHType(1, 1)), PreconditionError);
}

TEST(Integrals, MatchBetaFunctionValues) {
    // on x^4+y^4 = 1 the even moments are B((a+1)/4, (b+1)/4)
    for (int a = 0; a <= 6; a += 2)
        for (int b = 0; b <= 6; b += 2) {
            IntegralResult r = monomial_integral(quartic(), a, b);
            EXPECT_NEAR(r.value, beta((a + 1) / 4.0, (b + 1) / 4.0), 1e-8) << a << "," << b;
            EXPECT_LT(r.abs_error_estimate, 1e-7);
        }
}

TEST(Integrals, OddMomentsCertifiedZero) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 2}}) {
        IntegralResult r = monomial_integral(quartic(), a, b);
        EXPECT_TRUE(r.exact_zero_certificate) << a << "," << b;
        EXPECT_EQ(r.value, 0.0);
    }
}

TEST(Integrals, MomentRelations) {
    MomentReport rep = moment_suite(quartic(), 3);
    EXPECT_TRUE(rep.odd_all_certified);
    EXPECT_LT(rep.rel_i20_i02, 1e-9);
    EXPECT_LT(rep.max_shift4_defect, 1e-7);
    EXPECT_NEAR(rep.ratio_i00_i22, beta(0.25, 0.25) / beta(0.75, 0.75), 1e-7);
}

TEST(Symmetry, Certificates) {
    Polynomial h = parse_polynomial("(x^4+y^4)/4");
    QHType t(1, 1);
    EXPECT_EQ(symmetry_group(h, t).size(), 8u);
    EXPECT_TRUE(symmetry_certificate(h, t, parse_polynomial("x^2*y")));
    EXPECT_TRUE(symmetry_certificate(h, t, parse_polynomial("x^2 - y^2")));
    EXPECT_FALSE(symmetry_certificate(h, t, parse_polynomial("x^2 + y^2")));
    Polynomial hn = parse_polynomial("x^4/4 + y^2/2");
    EXPECT_EQ(symmetry_group(hn, QHType(1, 2)).size(), 4u);
    EXPECT_TRUE(symmetry_certificate(hn, QHType(1, 2), parse_polynomial("x^5 + 2*x*y^2")));
    EXPECT_FALSE(symmetry_certificate(hn, QHType(1, 2), parse_polynomial("x^2")));
}

TEST(Poincare, IntegralOfDissipation) {
    Polynomial mu = parse_polynomial("(x^4+y^4)/4 - 8*x^2*y^2");
    IntegralResult r = poincare_integral(quartic(), mu);
    double expect = 0.25 * (beta(1.25, 0.25) + beta(0.25, 1.25)) - 8 * beta(0.75, 0.75);
    EXPECT_NEAR(r.value, expect, 1e-7);
    EXPECT_FALSE(r.exact_zero_certificate);
}

TEST(Poincare, TraceAndCsv) {
    std::vector<OrbitRow> rows;
    poincare_integral(quartic(), parse_polynomial("x^2"), &rows);
    ASSERT_FALSE(rows.empty());
    EXPECT_NEAR(rows.back().theta, quartic().period, 1e-9);
    std::ostringstream os;
    write_orbit_csv(os, rows, "x^2");
    EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "theta,cs,sn,x^2");
}

TEST(CenterVerdict, SignRules) {
    IntegralResult pos{1.0, 1e-12, false, 2.0};
    IntegralResult neg{-1.0, 1e-12, false, 2.0};
    IntegralResult zero{0.0, 0.0, true, 1.0};
    IntegralResult tiny{1e-14, 1e-12, false, 1.0};
    EXPECT_EQ(center_verdict(1, pos, 1e-10), CenterVerdict::UnstableFocus);
    EXPECT_EQ(center_verdict(1, neg, 1e-10), CenterVerdict::StableFocus);
    EXPECT_EQ(center_verdict(-1, pos, 1e-10), CenterVerdict::StableFocus);
    EXPECT_EQ(center_verdict(1, zero, 1e-10), CenterVerdict::Center);
    EXPECT_EQ(center_verdict(1, tiny, 1e-10), CenterVerdict::Inconclusive);
}
