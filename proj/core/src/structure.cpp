#include "qhflow/structure.hpp"

#include "qhflow/errors.hpp"
#include "qhflow/lieops.hpp"
#include "qhflow/univariate.hpp"

#include <algorithm>
#include <climits>

namespace qhflow {

UnivariateReduction univariate_reduction(const Polynomial& h, const QHType& t) {
    if (h.is_zero()) throw PreconditionError("univariate reduction of the zero polynomial");
    auto d = h.min_degree(t.weight());
    if (!h.is_homogeneous(t.weight(), *d))
        throw PreconditionError(h.str() + " is not quasi-homogeneous of type " + t.str());
    UnivariateReduction u;
    u.i0 = INT_MAX;
    u.j0 = INT_MAX;
    for (const auto& [m, c] : h.terms()) {
        u.i0 = std::min(u.i0, m.i);
        u.j0 = std::min(u.j0, m.j);
    }
    int maxj = 0;
    for (const auto& [m, c] : h.terms()) maxj = std::max(maxj, m.j - u.j0);
    u.K = maxj / t.t1();
    for (const auto& [m, c] : h.terms()) {
        int jj = m.j - u.j0;
        if (jj % t.t1() != 0) throw InternalError("lattice step mismatch in univariate reduction");
        u.q.add_term(jj / t.t1(), 0, c);
    }
    return u;
}

Polynomial reconstruct(const UnivariateReduction& u, const QHType& t) {
    Polynomial h;
    for (const auto& [m, c] : u.q.terms())
        h.add_term(u.i0 + t.t2() * (u.K - m.i), u.j0 + t.t1() * m.i, c);
    return h;
}

bool check_h1(const Polynomial& h, const QHType& t) {
    auto u = univariate_reduction(h, t);
    if (u.i0 > 1 || u.j0 > 1) return false;
    Polynomial g = univariate_gcd(u.q, u.q.dx());
    return g.total_degree() == 0;
}

H2Result check_h2(const Polynomial& h, const QHType& t) {
    OperatorFamily fam(h, t);
    const int r = fam.r();
    std::vector<int> js;
    for (int j = 1; j <= r; ++j) js.push_back(j);
    for (int k : index_set_complement(t)) js.push_back(r + k);
    H2Result res;
    for (int j : js) {
        std::vector<Polynomial> cand;
        for (const auto& m : basis(t, j)) cand.push_back(h * Polynomial::monomial(m.i, m.j));
        res.checked.push_back(j);
        if (!is_complement(fam.at(r + t.abs() + j), cand)) {
            res.ok = false;
            res.failed.push_back(j);
        }
    }
    return res;
}

Monodromy is_monodromic(const Polynomial& h, const QHType& t) {
    auto u = univariate_reduction(h, t);
    if (u.i0 != 0 || u.j0 != 0) return {};
    // Slices h(+1, y) and h(-1, y) as univariate polynomials in y.
    Polynomial plus, minus;
    for (const auto& [m, c] : h.terms()) {
        plus.add_term(m.j, 0, c);
        minus.add_term(m.j, 0, m.i % 2 ? -c : c);
    }
    if (sturm_real_root_count(plus) != 0 || sturm_real_root_count(minus) != 0) return {};
    return {true, h.eval(Rational(1), Rational(0)).sign()};
}

int compute_n0(const QHType& t, int r) {
    auto gaps = index_set_complement(t);
    return gaps.empty() ? 1 + r : 1 + r + *gaps.rbegin();
}

HypothesisReport check_hypotheses(const Polynomial& h, const QHType& t) {
    HypothesisReport rep;
    rep.h1 = check_h1(h, t);
    int r = *h.min_degree(t.weight()) - t.abs();
    if (rep.h1) {
        auto h2 = check_h2(h, t);
        rep.h2 = h2.ok;
        rep.h2_checked_degrees = h2.checked;
        rep.h2_failed_degrees = h2.failed;
    }
    auto mono = is_monodromic(h, t);
    rep.monodromic = mono.monodromic;
    rep.sign = mono.sign;
    rep.n0 = compute_n0(t, r);
    return rep;
}

}  // namespace qhflow
