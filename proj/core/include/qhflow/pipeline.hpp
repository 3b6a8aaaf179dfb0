#pragma once

#include "qhflow/orbit.hpp"
#include "qhflow/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhflow {

struct AnalysisConfig {
    std::optional<int> degree;  // overrides the system file and the default
    double tol = 1e-10;
    bool leading_part = true;   // pull the AIIF back to the input coordinates
    std::vector<OrbitRow>* orbit_trace = nullptr;
};

// Picks the type from the system file or, when unique and Hamiltonian, from the
// Newton diagram (recorded in the notes). Throws InvalidType otherwise.
QHType resolve_type(const SystemSpec& spec, std::vector<std::string>* notes = nullptr);

// H1, H2 and monodromy of h; fills the type, r, h and hypothesis fields.
Report check_h_report(const Polynomial& h, const QHType& t);

// Full pipeline through the AIIF verdict; adds the center stage when the
// origin is monodromic and the verdict is AIIF.
Report classify(const SystemSpec& spec, const AnalysisConfig& cfg = {});

// Center stage for any monodromic system with a nonzero normal form.
Report center(const SystemSpec& spec, const AnalysisConfig& cfg = {});

struct IifVerification {
    bool ok = false;
    Polynomial defect;
    std::optional<int> lowest_defect_degree;
};

IifVerification verify_iif(const SystemSpec& spec, const Polynomial& w, const Rational& s);

// Exit status the CLI uses for a finished report: 0, 3 or 4.
int report_exit_code(const Report& r);

}  // namespace qhflow
