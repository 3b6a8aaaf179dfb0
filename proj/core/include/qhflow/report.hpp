#pragma once

#include "qhflow/normal_form.hpp"
#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"
#include "qhflow/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhflow {

struct MonomialRecord {
    int x = 0;
    int y = 0;
    Rational c;
    friend bool operator==(const MonomialRecord&, const MonomialRecord&) = default;
};

struct SystemSpec {
    std::optional<std::string> name;
    std::optional<QHType> type;
    std::vector<MonomialRecord> P;
    std::vector<MonomialRecord> Q;
    std::optional<int> truncation_degree;

    PlanarField field() const;
    static SystemSpec from_field(const PlanarField& f, std::optional<QHType> t = std::nullopt,
                                 std::optional<std::string> name = std::nullopt);
    friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

// Accepts {"name", "type": [t1,t2], "P": [...], "Q": [...], "truncation_degree"}.
// P and Q are monomial records {"x","y","c"} or a polynomial string.
// Duplicate exponent pairs are summed. Throws ParseError / InvalidType.
SystemSpec parse_system_json(const std::string& text);
std::string system_to_json(const SystemSpec& s);

struct NormalFormEntry {
    int degree = 0;
    std::vector<std::string> corange_basis;
    std::vector<Rational> coefficients;
    std::vector<Rational> second_stage;
    friend bool operator==(const NormalFormEntry&, const NormalFormEntry&) = default;
};

struct CenterReport {
    double I = 0.0;
    double error = 0.0;
    double scale = 0.0;
    double period = 0.0;
    double level = 0.0;
    bool certificate = false;
    std::string verdict;
    std::string mu;  // the integrand, after the sign adjustment
    friend bool operator==(const CenterReport&, const CenterReport&) = default;
};

struct AiifReport {
    Rational exponent;
    std::string W;
    bool verified = false;
    friend bool operator==(const AiifReport&, const AiifReport&) = default;
};

struct ReportConfig {
    int degree = 0;
    double tol = 1e-10;
    friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct Report {
    int schema_version = 1;
    std::string tool_version;
    SystemSpec input;
    std::optional<QHType> type;
    std::optional<int> r;
    std::string h;
    std::optional<HypothesisReport> hypothesis;
    std::vector<NormalFormEntry> normal_form;
    std::optional<Verdict> verdict;
    std::optional<AiifReport> aiif;
    bool monodromic = false;
    int sign = 0;
    std::optional<CenterReport> center;
    std::vector<std::string> notes;
    ReportConfig config;
    friend bool operator==(const Report&, const Report&) = default;
};

std::string report_to_json(const Report& r, int indent = 2);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

const char* tool_version();

}  // namespace qhflow
