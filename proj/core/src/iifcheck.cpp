#include "qhflow/iifcheck.hpp"

namespace qhflow {

IifCheck verify_power_iif(const PlanarField& f, const IifCandidate& cand, std::optional<int> truncate,
                          const QHType& t) {
    if (cand.w.is_zero()) throw PreconditionError("candidate W must be nonzero");
    if (cand.s.is_zero()) throw PreconditionError("exponent must be nonzero");
    Polynomial defect = lie_derivative(f, cand.w) * cand.s - divergence(f) * cand.w;
    if (truncate) defect = defect.truncate(t.weight(), *truncate);
    return {defect.is_zero(), defect};
}

IifCheck verify_polynomial_iif(const PlanarField& f, const Polynomial& v) {
    if (v.is_zero()) throw PreconditionError("inverse integrating factor must be nonzero");
    Polynomial defect = lie_derivative(f, v) - divergence(f) * v;
    return {defect.is_zero(), defect};
}

Polynomial series_inverse(const Polynomial& u, const DegreeCap& cap) {
    Rational c0 = u.constant_term();
    if (c0.is_zero()) throw PreconditionError("series inverse of a non-unit");
    Polynomial d = (u - Polynomial(c0)) / c0;  // u = c0(1+d)
    return series_power(d, Rational(-1), cap) / c0;
}

Polynomial series_power(const Polynomial& d, const Rational& a, const DegreeCap& cap) {
    if (!d.constant_term().is_zero()) throw PreconditionError("series_power needs d(0,0) = 0");
    Polynomial out = Polynomial(1).truncate(cap);
    Polynomial term = out;
    Polynomial dt = d.truncate(cap);
    for (int n = 1; !dt.is_zero(); ++n) {
        term = multiply_truncated(term, dt, cap);
        if (term.is_zero()) break;
        out += term * binomial(a, n);
    }
    return out;
}

Polynomial first_integral_truncated(const PlanarField& f, const Polynomial& v, int D) {
    if (v.constant_term().is_zero()) throw PreconditionError("v must be a unit at the origin");
    DegreeCap cap{Weight::total(), D - 1};
    Polynomial inv = series_inverse(v, cap);
    Polynomial A = multiply_truncated(f.q, inv, cap);
    Polynomial B = -multiply_truncated(f.p, inv, cap);
    Polynomial H;
    for (int d = 1; d <= D; ++d) {
        Polynomial a = A.component(Weight::total(), d - 1);
        Polynomial b = B.component(Weight::total(), d - 1);
        Polynomial defect = a.dy() - b.dx();
        if (!defect.is_zero())
            throw NotClosed("1-form (Q dx - P dy)/v is not closed at degree " + std::to_string(d - 2),
                            defect, d - 2);
        H += (Polynomial::x() * a + Polynomial::y() * b) / Rational(d);
    }
    return H;
}

}  // namespace qhflow
