#include "qhflow/pipeline.hpp"
#include "qhflow/errors.hpp"

#include <gtest/gtest.h>

using namespace qhflow;

namespace {

SystemSpec spec(const char* p, const char* q, std::optional<QHType> t = std::nullopt) {
    return SystemSpec::from_field({parse_polynomial(p), parse_polynomial(q)}, t);
}

}  // namespace

TEST(Pipeline, TypeSelection) {
    std::vector<std::string> notes;
    EXPECT_EQ(resolve_type(spec("y^2 + x^2*y", "x^3"), &notes).t2(), 4);
    EXPECT_EQ(notes.size(), 1u);
    EXPECT_THROW(resolve_type(spec("x^2*y", "x*y^2")), InvalidType);
}

TEST(Pipeline, MoussuNoAiif) {
    Report r = classify(spec("y^3", "-x^3 + x^2*y^2/2", QHType(1, 1)), {.degree = 14});
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict->kind, VerdictKind::NoAIIF);
    EXPECT_TRUE(r.monodromic);
    EXPECT_EQ(r.sign, -1);
    EXPECT_FALSE(r.center);
    EXPECT_EQ(report_exit_code(r), 0);
}

TEST(Pipeline, CuspAiif) {
    Report r = classify(spec("y^2 + 3*x^3", "x^3 + 4*x^2*y", QHType(3, 4)));
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict->kind, VerdictKind::AIIF);
    EXPECT_EQ(r.verdict->exponent, Rational(13, 12));
    EXPECT_FALSE(r.verdict->formal_iif);
    ASSERT_TRUE(r.aiif);
    EXPECT_TRUE(r.aiif->verified);
}

TEST(Pipeline, LinearCenterIntegrable) {
    Report r = classify(spec("-y", "x"));
    EXPECT_EQ(r.verdict->kind, VerdictKind::IntegrableUpToD);
    Report c = center(spec("-y", "x"));
    ASSERT_TRUE(c.center);
    EXPECT_EQ(c.center->verdict, "Center");
}

TEST(Pipeline, CenterRequiresMonodromy) {
    EXPECT_THROW(center(spec("y^2", "x^3 + x^2*y", QHType(3, 4))), PreconditionError);
}

TEST(Pipeline, HypothesisFailureExitCode) {
    Report r = check_h_report(parse_polynomial("x^2*y"), QHType(1, 1));
    EXPECT_EQ(report_exit_code(r), 3);
    EXPECT_THROW(check_h_report(parse_polynomial("x^2 + y^3"), QHType(1, 1)), PreconditionError);
}

TEST(Pipeline, NilpotentCenterAndFocus) {
    auto run = [](const char* mu) {
        std::string m = std::string("(") + mu + ")";
        return center(spec(("y + x*" + m).c_str(), ("-x^3 + 2*y*" + m).c_str(), QHType(1, 2)));
    };
    EXPECT_EQ(run("x*(-x^4/4 - y^2/2)").center->verdict, "Center");
    EXPECT_EQ(run("-x^4/4 - y^2/2").center->verdict, "StableFocus");
    EXPECT_EQ(run("x^2").center->verdict, "UnstableFocus");
}

TEST(Pipeline, VerifyIif) {
    auto v = verify_iif(spec("y^2 + x^3", "x^3 + 4/3*x^2*y"), parse_polynomial("4*y^3 - 3*x^4"), Rational(13, 12));
    EXPECT_TRUE(v.ok);
    auto w = verify_iif(spec("y^2 + x^3", "x^3 + 4/3*x^2*y"), parse_polynomial("4*y^3 - 3*x^4"), Rational(1));
    EXPECT_FALSE(w.ok);
    EXPECT_TRUE(w.lowest_defect_degree.has_value());
}
