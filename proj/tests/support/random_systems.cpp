#include "support/random_systems.hpp"

#include <numeric>

namespace qhflow::testing {

int Gen::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Gen::rational(int max_num, int max_den) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
}

Rational Gen::nonzero_rational(int max_num, int max_den) {
    Rational q;
    while ((q = rational(max_num, max_den)).is_zero()) {
    }
    return q;
}

Polynomial Gen::poly(int min_deg, int max_deg, int terms) {
    Polynomial p;
    for (int n = 0; n < terms; ++n) {
        int d = integer(min_deg, max_deg);
        int i = integer(0, d);
        p.add_term(i, d - i, rational());
    }
    return p;
}

Polynomial Gen::qh_poly(const QHType& t, int k, double density) {
    Polynomial p;
    std::bernoulli_distribution keep(density);
    for (const auto& m : basis(t, k))
        if (keep(rng_)) p.add_term(m.i, m.j, rational());
    return p;
}

PlanarField Gen::qh_field(const QHType& t, int j, double density) {
    return {qh_poly(t, j + t.t1(), density), qh_poly(t, j + t.t2(), density)};
}

QHType Gen::type(int max_t2) {
    for (;;) {
        int t2 = integer(1, max_t2);
        int t1 = integer(1, t2);
        if (std::gcd(t1, t2) == 1) return QHType(t1, t2);
    }
}

std::vector<HamiltonianCase> hamiltonian_catalog() {
    auto P = [](const char* s) { return parse_polynomial(s); };
    return {
        {P("(x^2+y^2)/2"), QHType(1, 1), "linear center"},
        {P("x*y"), QHType(1, 1), "saddle"},
        {P("y^3/3 + x^3 - x^2*y"), QHType(1, 1), "cubic"},
        {P("(x^4+y^4)/4"), QHType(1, 1), "quartic"},
        {P("x^4/4 - y^3/3"), QHType(3, 4), "cusp (3,4)"},
        {P("-x^4/4 - y^2/2"), QHType(1, 2), "nilpotent center"},
        {P("x^4/4 - y^2/2"), QHType(1, 2), "nilpotent saddle"},
        {P("-x^6/6 - y^2/2"), QHType(1, 3), "nilpotent n=5"},
    };
}

PlanarField random_perturbation(Gen& g, const HamiltonianCase& c, int extra, int max_total) {
    GradedField lead = decompose_field(hamiltonian_field(c.h), c.t);
    const int r = lead.begin()->first;
    PlanarField f = hamiltonian_field(c.h);
    for (int j = r + 1; j <= r + extra; ++j) {
        PlanarField fj = g.qh_field(c.t, j, 0.7);
        fj.p = fj.p.truncate(Weight::total(), max_total);
        fj.q = fj.q.truncate(Weight::total(), max_total);
        f = f + fj;
    }
    return f;
}

}  // namespace qhflow::testing
