#pragma once

#include <functional>
#include <vector>

namespace qhflow {

using State = std::vector<double>;
using Rhs = std::function<void(double t, const State& y, State& dy)>;

struct StepperOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double initial_step = 1e-3;
    double max_step = 0.1;
    long max_steps = 20'000'000;
};

// Embedded Dormand-Prince 5(4) pair with standard step-size control.
class DormandPrince {
public:
    DormandPrince(Rhs f, size_t dim, StepperOptions opts = {});

    // One fixed step of size h (no error control); returns the 5th-order result.
    State step_fixed(double t, const State& y, double h) const;

    // Attempts one adaptive step from (t, y) with trial size h. On acceptance
    // advances t and y, stores the size used in `taken` and the next proposal in h.
    bool try_step(double& t, State& y, double& h, double& taken) const;

    const StepperOptions& options() const { return opts_; }

private:
    void stages(double t, const State& y, double h, State& y5, State& err) const;

    Rhs f_;
    size_t dim_;
    StepperOptions opts_;
};

}  // namespace qhflow
