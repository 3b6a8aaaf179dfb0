#include "qhflow/pipeline.hpp"
#include "qhflow/errors.hpp"

#include <gtest/gtest.h>

using namespace qhflow;

TEST(SystemJson, RecordsAndStrings) {
    SystemSpec a = parse_system_json(R"({"name":"m","type":[1,1],
        "P":[{"x":0,"y":3,"c":"1"}],
        "Q":[{"x":3,"y":0,"c":"-1"},{"x":2,"y":2,"c":"1/4"},{"x":2,"y":2,"c":"1/4"}],
        "truncation_degree":14})");
    EXPECT_EQ(a.name, "m");
    EXPECT_EQ(a.truncation_degree, 14);
    EXPECT_EQ(a.field().q, parse_polynomial("-x^3 + 1/2*x^2*y^2"));  // duplicates summed
    SystemSpec b = parse_system_json(R"({"P":"y^3","Q":"-x^3 + x^2*y^2/2"})");
    EXPECT_EQ(b.field(), a.field());
    EXPECT_FALSE(b.type.has_value());
    EXPECT_EQ(parse_system_json(system_to_json(a)), a);
}

TEST(SystemJson, Errors) {
    EXPECT_THROW(parse_system_json("{"), ParseError);
    EXPECT_THROW(parse_system_json(R"({"P":"y"})"), ParseError);
    EXPECT_THROW(parse_system_json(R"({"P":[{"x":0,"y":1,"c":"1/0"}],"Q":"x"})"), ParseError);
    EXPECT_THROW(parse_system_json(R"({"P":[{"x":-1,"y":1,"c":"1"}],"Q":"x"})"), ParseError);
    EXPECT_THROW(parse_system_json(R"({"type":[2,4],"P":"y","Q":"x"})"), InvalidType);
    EXPECT_THROW(parse_system_json(R"({"P":"y^99999","Q":"x"})"), InputTooLarge);
}

TEST(ReportJson, RoundTripAndDeterminism) {
    SystemSpec s = parse_system_json(R"({"type":[1,1],"P":"-y^3 + x*(x^4+y^4)/4","Q":"x^3 + y*(x^4+y^4)/4"})");
    Report r = classify(s);
    std::string j = report_to_json(r);
    Report back = report_from_json(j);
    EXPECT_EQ(back, r);
    EXPECT_EQ(report_to_json(back), j);
    EXPECT_EQ(report_to_json(classify(s)), j);
}

TEST(ReportJson, ExactAndApproximateTags) {
    SystemSpec s = parse_system_json(R"({"type":[1,1],"P":"-y^3 + x*(x^4+y^4)/4","Q":"x^3 + y*(x^4+y^4)/4"})");
    std::string j = report_to_json(classify(s));
    EXPECT_NE(j.find(R"("exact": "3/2")"), std::string::npos) << j;
    EXPECT_NE(j.find(R"("approx")"), std::string::npos);
    EXPECT_NE(j.find(R"("schema_version": 1)"), std::string::npos);
}

TEST(ReportText, MentionsVerdict) {
    SystemSpec s = parse_system_json(R"({"P":"-y","Q":"x"})");
    std::string t = report_to_text(classify(s));
    EXPECT_NE(t.find("IntegrableUpToD"), std::string::npos) << t;
}
