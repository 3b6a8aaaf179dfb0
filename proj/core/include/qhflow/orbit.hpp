#pragma once

#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qhflow {

struct TrigSample {
    double theta;
    double cs;
    double sn;
};

// Periodic solution of d(Cs,Sn)/dtheta = X_h(Cs,Sn) from (1,0).
struct TrigTable {
    Polynomial h;
    QHType type{1, 1};
    double x0 = 1.0;
    double level = 0.0;  // h(x0, 0)
    std::vector<TrigSample> samples;
    double period = 0.0;
    double tolerance = 1e-10;
    double max_level_defect = 0.0;  // max |h - level| / |level| over accepted steps
    double closure_error = 0.0;
};

// Requires h positive definite (monodromic with sign +1).
TrigTable generalized_trig(const Polynomial& h, const QHType& t, double tol = 1e-10);

struct IntegralResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    bool exact_zero_certificate = false;
    double scale = 1.0;  // integral of |integrand|, the yardstick for "small"
};

struct OrbitRow {
    double theta;
    double cs;
    double sn;
    double running;
};

IntegralResult monomial_integral(const TrigTable& table, int n, int k);
std::vector<IntegralResult> monomial_integrals(const TrigTable& table,
                                               const std::vector<std::pair<int, int>>& nk);

// integral over one period of mu(Cs, Sn); optionally records one row per accepted step.
IntegralResult poincare_integral(const TrigTable& table, const Polynomial& mu,
                                 std::vector<OrbitRow>* trace = nullptr);

// Signed coordinate permutations S with h(S(x,y)) = h(x,y). Swaps only when t1 = t2.
struct SignedPermutation {
    bool swap = false;
    int sx = 1;
    int sy = 1;
};
std::vector<SignedPermutation> symmetry_group(const Polynomial& h, const QHType& t);
Polynomial apply_symmetry(const Polynomial& f, const SignedPermutation& s);

// True when the symmetry average of mu lies in the range of the Poisson
// operator of h, which forces the integral of mu over every level curve to vanish.
bool symmetry_certificate(const Polynomial& h, const QHType& t, const Polynomial& mu);

enum class CenterVerdict { Center, UnstableFocus, StableFocus, Inconclusive };
std::string to_string(CenterVerdict v);

CenterVerdict center_verdict(int sign_h, const IntegralResult& i, double tol);

struct MomentEntry {
    int n = 0;
    int k = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_defect = 0.0;
};

struct MomentReport {
    std::vector<MomentEntry> recurrence;  // I_{2n+2,2k+2} against (2n+1)(2k+1)/(4(n+k+2)(n+k+1)) I_{2n,2k}
    double max_recurrence_defect = 0.0;
    std::vector<MomentEntry> shift4;      // I_{2n+4,2k+4} against (2n+1)(2k+1)/(4(n+k+1)(n+k+3)) I_{2n,2k}
    double max_shift4_defect = 0.0;
    bool odd_all_certified = true;
    double odd_max_abs = 0.0;
    double i00 = 0.0, i22 = 0.0, i20 = 0.0, i02 = 0.0;
    double ratio_i00_i22 = 0.0;
    double rel_i20_i02 = 0.0;
};

MomentReport moment_suite(const TrigTable& table, int max_nk);

void write_orbit_csv(std::ostream& os, const std::vector<OrbitRow>& rows, const std::string& integrand);

}  // namespace qhflow
