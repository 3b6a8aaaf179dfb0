#include "qhflow/orbit.hpp"

#include "qhflow/errors.hpp"
#include "qhflow/integrator.hpp"
#include "qhflow/lieops.hpp"
#include "qhflow/structure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qhflow {

namespace {

// Polynomial compiled for fast double evaluation.
struct Compiled {
    struct Term {
        int i, j;
        double c;
    };
    std::vector<Term> terms;
    int maxi = 0, maxj = 0;

    explicit Compiled(const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            terms.push_back({m.i, m.j, c.to_double()});
            maxi = std::max(maxi, m.i);
            maxj = std::max(maxj, m.j);
        }
    }

    double operator()(const std::vector<double>& xp, const std::vector<double>& yp) const {
        double s = 0.0;
        for (const auto& t : terms) s += t.c * xp[t.i] * yp[t.j];
        return s;
    }
};

void powers(double v, int n, std::vector<double>& out) {
    out.resize(n + 1);
    out[0] = 1.0;
    for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * v;
}

StepperOptions stepper_for(double tol) {
    StepperOptions o;
    o.rtol = std::max(tol * 1e-2, 1e-15);
    o.atol = std::max(tol * 1e-4, 1e-17);
    o.initial_step = 1e-3;
    o.max_step = 0.05;
    return o;
}

struct Hamiltonian {
    Compiled hx, hy, h;
    int maxdeg;
    explicit Hamiltonian(const Polynomial& p)
        : hx(p.dx()), hy(p.dy()), h(p), maxdeg(std::max(p.total_degree(), 1)) {}
};

// Integrates (Cs, Sn) together with accumulators of the given integrands over [0, T].
std::vector<double> integrate_period(const TrigTable& table, const std::vector<Polynomial>& integrands,
                                     double tol, std::vector<OrbitRow>* trace, std::vector<double>* abs_acc) {
    Hamiltonian H(table.h);
    std::vector<Compiled> ints;
    int maxd = H.maxdeg;
    for (const auto& p : integrands) {
        ints.emplace_back(p);
        maxd = std::max({maxd, ints.back().maxi, ints.back().maxj});
    }
    const size_t m = ints.size();
    const size_t dim = 2 + 2 * m;  // signed and absolute accumulators
    Rhs f = [&, maxd](double, const State& s, State& ds) {
        std::vector<double> xp, yp;
        powers(s[0], maxd, xp);
        powers(s[1], maxd, yp);
        ds[0] = -H.hy(xp, yp);
        ds[1] = H.hx(xp, yp);
        for (size_t k = 0; k < m; ++k) {
            double v = ints[k](xp, yp);
            ds[2 + k] = v;
            ds[2 + m + k] = std::abs(v);
        }
    };
    StepperOptions opts = stepper_for(tol);
    DormandPrince dp(f, dim, opts);
    State s(dim, 0.0);
    s[0] = table.x0;
    double t = 0.0, h = opts.initial_step, taken = 0.0;
    const double T = table.period;
    long steps = 0;
    if (trace) trace->push_back({0.0, s[0], s[1], 0.0});
    while (t < T) {
        if (++steps > opts.max_steps) throw NumericalFailure("step budget exhausted while integrating over a period");
        double hh = std::min(h, T - t);
        bool last = hh == T - t;
        double tt = t;
        if (dp.try_step(tt, s, hh, taken)) {
            t = last ? T : tt;
            h = std::max(hh, 1e-12);
            if (trace) trace->push_back({t, s[0], s[1], m ? s[2] : 0.0});
        } else {
            h = hh;
        }
    }
    std::vector<double> out(s.begin() + 2, s.begin() + 2 + m);
    if (abs_acc) abs_acc->assign(s.begin() + 2 + m, s.end());
    return out;
}

}  // namespace

TrigTable generalized_trig(const Polynomial& h, const QHType& t, double tol) {
    auto mono = is_monodromic(h, t);
    if (!mono.monodromic) throw PreconditionError("h = " + h.str() + " is not definite; the origin is not monodromic");
    if (mono.sign != 1) throw PreconditionError("generalized_trig expects h > 0 away from the origin");

    TrigTable tab;
    tab.h = h;
    tab.type = t;
    tab.tolerance = tol;
    tab.level = h.eval(1.0, 0.0);

    Hamiltonian H(h);
    Rhs f = [&](double, const State& s, State& ds) {
        std::vector<double> xp, yp;
        powers(s[0], H.maxdeg, xp);
        powers(s[1], H.maxdeg, yp);
        ds[0] = -H.hy(xp, yp);
        ds[1] = H.hx(xp, yp);
    };
    auto level_at = [&](const State& s) {
        std::vector<double> xp, yp;
        powers(s[0], H.maxdeg, xp);
        powers(s[1], H.maxdeg, yp);
        return H.h(xp, yp);
    };
    StepperOptions opts = stepper_for(tol);
    DormandPrince dp(f, 2, opts);
    State s{tab.x0, 0.0};
    double th = 0.0, step = opts.initial_step, taken = 0.0;
    tab.samples.push_back({0.0, s[0], s[1]});
    for (long n = 0;; ++n) {
        if (n > opts.max_steps || th > 1e7) throw NumericalFailure("orbit failed to close");
        State prev = s;
        double th0 = th;
        if (!dp.try_step(th, s, step, taken)) continue;
        double defect = std::abs(level_at(s) - tab.level) / std::abs(tab.level);
        tab.max_level_defect = std::max(tab.max_level_defect, defect);
        if (defect > tol) throw NumericalFailure("level-set drift exceeded the tolerance");
        if (prev[1] < 0.0 && s[1] >= 0.0 && s[0] > 0.0) {
            // Bisect on the size of a single step from prev.
            double lo = 0.0, hi = taken;
            for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, th0); ++it) {
                double mid = 0.5 * (lo + hi);
                if (dp.step_fixed(th0, prev, mid)[1] < 0.0) lo = mid;
                else hi = mid;
            }
            State end = dp.step_fixed(th0, prev, hi);
            std::vector<double> xp, yp;
            powers(end[0], H.maxdeg, xp);
            powers(end[1], H.maxdeg, yp);
            if (!(H.hx(xp, yp) > 0.0)) throw NumericalFailure("section crossing is not transversal");
            tab.period = th0 + hi;
            tab.samples.push_back({tab.period, end[0], end[1]});
            tab.closure_error = std::hypot(end[0] - tab.x0, end[1]);
            break;
        }
        tab.samples.push_back({th, s[0], s[1]});
    }
    if (tab.closure_error > tol) throw NumericalFailure("orbit closure error exceeds the tolerance");
    return tab;
}

std::vector<SignedPermutation> symmetry_group(const Polynomial& h, const QHType& t) {
    std::vector<SignedPermutation> out;
    for (int sw = 0; sw < (t.t1() == t.t2() ? 2 : 1); ++sw)
        for (int sx : {1, -1})
            for (int sy : {1, -1}) {
                SignedPermutation s{sw == 1, sx, sy};
                if (apply_symmetry(h, s) == h) out.push_back(s);
            }
    return out;
}

Polynomial apply_symmetry(const Polynomial& f, const SignedPermutation& s) {
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        // f(S(x,y)) with S(x,y) = (sx*x, sy*y) or (sx*y, sy*x)
        Rational sign = Rational(((m.i % 2) && s.sx < 0) != ((m.j % 2) && s.sy < 0) ? -1 : 1);
        if (s.swap) r.add_term(m.j, m.i, c * sign);
        else r.add_term(m.i, m.j, c * sign);
    }
    return r;
}

bool symmetry_certificate(const Polynomial& h, const QHType& t, const Polynomial& mu) {
    auto group = symmetry_group(h, t);
    Polynomial avg;
    for (const auto& s : group) avg += apply_symmetry(mu, s);
    if (avg.is_zero()) return true;
    OperatorFamily fam(h, t);
    for (const auto& [k, comp] : decompose_poly(avg, t)) {
        if (!solve_in_range(fam.at(k), comp).residual.is_zero()) return false;
    }
    return true;
}

std::vector<IntegralResult> monomial_integrals(const TrigTable& table,
                                               const std::vector<std::pair<int, int>>& nk) {
    std::vector<Polynomial> ints;
    for (auto [n, k] : nk) ints.push_back(Polynomial::monomial(n, k));
    std::vector<double> absv;
    auto coarse = integrate_period(table, ints, table.tolerance, nullptr, nullptr);
    TrigTable fine_tab = generalized_trig(table.h, table.type, table.tolerance / 32);
    auto fine = integrate_period(fine_tab, ints, fine_tab.tolerance, nullptr, &absv);
    std::vector<IntegralResult> out;
    for (size_t q = 0; q < nk.size(); ++q) {
        IntegralResult r;
        r.scale = absv[q];
        r.exact_zero_certificate = symmetry_certificate(table.h, table.type, ints[q]);
        r.value = r.exact_zero_certificate ? 0.0 : fine[q];
        r.abs_error_estimate = std::max(2.0 * std::abs(fine[q] - coarse[q]), 1e-15 * r.scale);
        out.push_back(r);
    }
    return out;
}

IntegralResult monomial_integral(const TrigTable& table, int n, int k) {
    return monomial_integrals(table, {{n, k}}).front();
}

IntegralResult poincare_integral(const TrigTable& table, const Polynomial& mu, std::vector<OrbitRow>* trace) {
    std::vector<double> absv;
    auto coarse = integrate_period(table, {mu}, table.tolerance, nullptr, nullptr);
    TrigTable fine_tab = generalized_trig(table.h, table.type, table.tolerance / 32);
    auto fine = integrate_period(fine_tab, {mu}, fine_tab.tolerance, trace, &absv);
    IntegralResult r;
    r.scale = absv[0];
    r.exact_zero_certificate = symmetry_certificate(table.h, table.type, mu);
    r.value = r.exact_zero_certificate ? 0.0 : fine[0];
    r.abs_error_estimate = std::max(2.0 * std::abs(fine[0] - coarse[0]), 1e-15 * r.scale);
    return r;
}

std::string to_string(CenterVerdict v) {
    switch (v) {
        case CenterVerdict::Center: return "Center";
        case CenterVerdict::UnstableFocus: return "UnstableFocus";
        case CenterVerdict::StableFocus: return "StableFocus";
        case CenterVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CenterVerdict center_verdict(int sign_h, const IntegralResult& i, double tol) {
    if (i.exact_zero_certificate) return CenterVerdict::Center;
    double a = std::abs(i.value);
    if (a > tol * i.scale && a > i.abs_error_estimate)
        return sign_h * i.value > 0 ? CenterVerdict::UnstableFocus : CenterVerdict::StableFocus;
    return CenterVerdict::Inconclusive;
}

MomentReport moment_suite(const TrigTable& table, int max_nk) {
    const int top = 2 * max_nk + 4;
    std::vector<std::pair<int, int>> nk;
    for (int a = 0; a <= top; ++a)
        for (int b = 0; b <= top; ++b) nk.emplace_back(a, b);
    auto res = monomial_integrals(table, nk);
    auto I = [&](int a, int b) -> const IntegralResult& { return res[a * (top + 1) + b]; };
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); };

    MomentReport rep;
    for (int n = 0; n <= max_nk; ++n)
        for (int k = 0; k <= max_nk; ++k) {
            double f = (2.0 * n + 1) * (2.0 * k + 1) / (4.0 * (n + k + 2) * (n + k + 1));
            MomentEntry e{n, k, I(2 * n + 2, 2 * k + 2).value, f * I(2 * n, 2 * k).value, 0.0};
            e.rel_defect = rel(e.lhs, e.rhs);
            rep.max_recurrence_defect = std::max(rep.max_recurrence_defect, e.rel_defect);
            rep.recurrence.push_back(e);

            double g = (2.0 * n + 1) * (2.0 * k + 1) / (4.0 * (n + k + 1) * (n + k + 3));
            MomentEntry s{n, k, I(2 * n + 4, 2 * k + 4).value, g * I(2 * n, 2 * k).value, 0.0};
            s.rel_defect = rel(s.lhs, s.rhs);
            rep.max_shift4_defect = std::max(rep.max_shift4_defect, s.rel_defect);
            rep.shift4.push_back(s);

            for (const auto& odd : {I(2 * n + 1, k), I(n, 2 * k + 1)}) {
                rep.odd_all_certified = rep.odd_all_certified && odd.exact_zero_certificate;
                rep.odd_max_abs = std::max(rep.odd_max_abs, std::abs(odd.value));
            }
        }
    rep.i00 = I(0, 0).value;
    rep.i22 = I(2, 2).value;
    rep.i20 = I(2, 0).value;
    rep.i02 = I(0, 2).value;
    rep.ratio_i00_i22 = rep.i00 / rep.i22;
    rep.rel_i20_i02 = rel(rep.i20, rep.i02);
    return rep;
}

void write_orbit_csv(std::ostream& os, const std::vector<OrbitRow>& rows, const std::string& integrand) {
    os << "theta,cs,sn," << integrand << "\n";
    os.precision(17);
    for (const auto& r : rows) os << r.theta << "," << r.cs << "," << r.sn << "," << r.running << "\n";
}

}  // namespace qhflow
