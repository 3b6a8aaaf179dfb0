#include "qhflow/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace qhflow {

namespace {
// Dormand-Prince coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (error weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace

DormandPrince::DormandPrince(Rhs f, size_t dim, StepperOptions opts)
    : f_(std::move(f)), dim_(dim), opts_(opts) {}

void DormandPrince::stages(double t, const State& y, double h, State& y5, State& err) const {
    const size_t n = dim_;
    State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n);
    f_(t, y, k1);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    f_(t + c2 * h, tmp, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f_(t + c3 * h, tmp, k3);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f_(t + c4 * h, tmp, k4);
    for (size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f_(t + c5 * h, tmp, k5);
    for (size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f_(t + h, tmp, k6);
    y5.resize(n);
    for (size_t i = 0; i < n; ++i)
        y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f_(t + h, y5, k7);
    err.resize(n);
    for (size_t i = 0; i < n; ++i)
        err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
}

State DormandPrince::step_fixed(double t, const State& y, double h) const {
    State y5, err;
    stages(t, y, h, y5, err);
    return y5;
}

bool DormandPrince::try_step(double& t, State& y, double& h, double& taken) const {
    State y5, err;
    stages(t, y, h, y5, err);
    double norm = 0.0;
    for (size_t i = 0; i < dim_; ++i) {
        double sc = opts_.atol + opts_.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        norm = std::max(norm, std::abs(err[i]) / sc);
    }
    double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    if (norm <= 1.0) {
        t += h;
        y = std::move(y5);
        taken = h;
        h = std::min(h * factor, opts_.max_step);
        return true;
    }
    h *= std::max(factor, 0.1);
    return false;
}

}  // namespace qhflow
