#include "qhflow/normal_form.hpp"

#include "qhflow/errors.hpp"
#include "qhflow/iifcheck.hpp"
#include "qhflow/structure.hpp"

#include <algorithm>

namespace qhflow {

namespace {

bool all_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

Polynomial combine(const Vector& c, const std::vector<Polynomial>& basis) {
    Polynomial p;
    for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) p += basis[k] * c[k];
    return p;
}

}  // namespace

Polynomial NormalFormResult::mu_poly(int j) const {
    auto it = mu.find(j);
    return it == mu.end() ? Polynomial() : combine(it->second, corange(j));
}

Polynomial NormalFormResult::second_stage_poly(int j) const {
    auto it = second_stage_mu.find(j);
    return it == second_stage_mu.end() ? Polynomial() : combine(it->second, corange(j));
}

int default_truncation(const QHType& t, int r) {
    auto gaps = index_set_complement(t);
    return r + 2 * (r + t.abs()) + (gaps.empty() ? 0 : *gaps.rbegin());
}

PlanarField apply_step(const PlanarField& f, const QHType& t, const NormalFormStep& step, int r, int D) {
    const Weight w = t.weight();
    const DegreeCap cap_p{w, D + t.t1()}, cap_q{w, D + t.t2()}, cap_s{w, D - r};
    const PlanarField d0 = euler_field(t);
    const Polynomial Y1 = -step.p.dy() + step.xi * d0.p;
    const Polynomial Y2 = step.p.dx() + step.xi * d0.q;

    const Polynomial X = Polynomial::x() + Y1;
    const Polynomial Yv = Polynomial::y() + Y2;
    const Polynomial fp = f.p.compose(X, Yv, cap_p);
    const Polynomial fq = f.q.compose(X, Yv, cap_q);

    const Polynomial a = Y1.dx(), b = Y1.dy(), c = Y2.dx(), d = Y2.dy();
    // det(I+DY) = 1 + delta
    const Polynomial delta = a + d + a * d - b * c;
    const Polynomial scale =
        multiply_truncated(Polynomial(1) + step.rho, series_power(delta, Rational(-1), cap_s), cap_s);

    Polynomial gp = multiply_truncated(Polynomial(1) + d, fp, cap_p) - multiply_truncated(b, fq, cap_p);
    Polynomial gq = multiply_truncated(Polynomial(1) + a, fq, cap_q) - multiply_truncated(c, fp, cap_q);
    return {multiply_truncated(scale, gp, cap_p), multiply_truncated(scale, gq, cap_q)};
}

NormalFormResult normal_form(const PlanarField& f, const QHType& t, int D, const NormalFormOptions& opts) {
    GradedField graded = decompose_field(f, t);
    const int r = graded.begin()->first;
    Polynomial h = hamiltonian_potential(graded.begin()->second, t);
    if (r < 0) throw PreconditionError("the origin is not a singular point (leading degree " + std::to_string(r) + ")");
    if (D <= r) throw PreconditionError("truncation degree must exceed r = " + std::to_string(r));

    if (opts.check_hypotheses) {
        if (!check_h1(h, t)) throw HypothesisError("H1 fails: h = " + h.str() + " has a repeated factor");
        auto h2 = check_h2(h, t);
        if (!h2.ok)
            throw HypothesisError("H2 fails: h*P_j does not complement the range at j = " +
                                  std::to_string(h2.failed.front()));
    }

    NormalFormResult nf;
    nf.h = h;
    nf.type = t;
    nf.r = r;
    nf.D = D;
    auto fam = std::make_shared<OperatorFamily>(h, t);
    nf.operators = fam;

    const int R = r + t.abs();
    const PlanarField d0 = euler_field(t);
    PlanarField F = truncate_field(f, t, D);

    for (int k = r + 1; k <= D; ++k) {
        PlanarField fk = field_component(F, t, k);
        SplitPair sp = split_conservative_dissipative(fk, t);
        const Rational kt(k + t.abs());

        // g = l_{k+|t|}(p) + h*sigma''
        const OperatorDecomposition& big = fam->at(k + t.abs());
        std::vector<Monomial> sbasis = basis(t, k - r);
        Polynomial p, sigma2;
        if (!sp.g.is_zero()) {
            std::vector<Vector> cols;
            for (const auto& m : sbasis)
                cols.push_back(monomial_coords(h * Polynomial::monomial(m.i, m.j), big.codomain_basis));
            Matrix a = big.matrix.hconcat(Matrix::from_columns(big.codomain_basis.size(), cols));
            auto z = solve_pivot(a, monomial_coords(sp.g, big.codomain_basis));
            if (!z)
                throw HypothesisError("H2 fails: conservative part at degree " + std::to_string(k) +
                                      " cannot be removed");
            const size_t nd = big.domain_basis.size();
            p = from_monomial_coords(Vector(z->begin(), z->begin() + nd), big.domain_basis);
            sigma2 = from_monomial_coords(Vector(z->begin() + nd, z->end()), sbasis);
        }
        Polynomial sigma = sigma2 * (-kt / Rational(R));
        Polynomial m = sp.mu + poisson(h, sigma) / kt;
        RangeSolution sol = solve_in_range(fam->at(k), m);
        NormalFormStep step{k, p, sol.p, sigma - sol.p * Rational(r)};

        nf.mu[k] = sol.residual_coords;
        if (step.trivial()) {
            if (!(fk == sol.residual * d0)) throw InternalError("trivial step left a non-normal component");
            continue;
        }
        PlanarField G = apply_step(F, t, step, r, D);
        for (int j = r; j < k; ++j)
            if (!(field_component(G, t, j) == field_component(F, t, j)))
                throw InternalError("normal-form step disturbed degree " + std::to_string(j));
        if (!(field_component(G, t, k) == sol.residual * d0))
            throw InternalError("normal-form step at degree " + std::to_string(k) + " missed the corange");
        F = std::move(G);
        nf.steps.push_back(std::move(step));
    }
    nf.reduced = F;
    for (const auto& [j, c] : nf.mu) {
        if (!all_zero(c)) {
            nf.N = j - r;
            break;
        }
    }
    nf.second_stage_mu = nf.mu;
    return nf;
}

NormalFormResult second_stage(const NormalFormResult& nf) {
    NormalFormResult out = nf;
    out.second_stage_mu = nf.mu;
    out.second_stage_alpha.clear();
    if (!nf.N) return out;
    const int R = nf.r + nf.type.abs();
    const int base = nf.r + *nf.N;
    const Polynomial lambda = nf.mu_poly(base);
    Polynomial hl(1);
    for (int l = 1; base + l * R <= nf.D; ++l) {
        hl = hl * nf.h;
        const int k = base + l * R;
        Vector dir = solve_in_range(nf.operators->at(k), lambda * hl).residual_coords;
        Vector& cur = out.second_stage_mu[k];
        size_t idx = 0;
        while (idx < dir.size() && dir[idx].is_zero()) ++idx;
        if (idx == dir.size()) continue;
        Rational alpha = cur[idx] / dir[idx];
        if (alpha.is_zero()) continue;
        for (size_t c = 0; c < cur.size(); ++c) cur[c] -= alpha * dir[c];
        out.second_stage_alpha[k] = alpha;
    }
    return out;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::IntegrableUpToD: return "IntegrableUpToD";
        case VerdictKind::AIIF: return "AIIF";
        case VerdictKind::NoAIIF: return "NoAIIF";
    }
    return "?";
}

Verdict classify_aiif(const NormalFormResult& nf) {
    Verdict v;
    v.D = nf.D;
    if (!nf.N) {
        v.kind = VerdictKind::IntegrableUpToD;
        v.formal_iif = true;
        v.notes.push_back("all normal-form coefficients vanish up to degree " + std::to_string(nf.D));
        return v;
    }
    const int R = nf.r + nf.type.abs();
    v.N = nf.N;
    for (const auto& [j, c] : nf.second_stage_mu) {
        if (j <= nf.r + *nf.N) continue;
        if (!all_zero(c)) {
            v.kind = VerdictKind::NoAIIF;
            v.witness_degree = j;
            v.notes.push_back("irremovable normal-form term at degree " + std::to_string(j));
            return v;
        }
    }
    v.kind = VerdictKind::AIIF;
    v.exponent = Rational(1) + Rational(*nf.N) / Rational(R);
    v.formal_iif = v.exponent->is_integer();
    if (nf.r + *nf.N + R > nf.D)
        v.notes.push_back("truncation degree reaches no second-stage degree; verdict rests on mu_{r+N} alone");
    return v;
}

SeriesObstruction aiif_series_obstruction(const Polynomial& h, const QHType& t,
                                          const std::map<int, Polynomial>& mu, int N, int D) {
    const int r = *h.min_degree(t.weight()) - t.abs();
    const int R = r + t.abs();
    const int base = r + N;
    auto get = [&](int k) {
        auto it = mu.find(k);
        return it == mu.end() ? Polynomial() : it->second;
    };
    const Polynomial lambda = get(base);
    if (lambda.is_zero()) throw PreconditionError("mu_{r+N} must be nonzero");
    const Rational A(base + t.abs()), Rr(R);

    SeriesObstruction out;
    out.b[1] = Rational(1);
    std::map<int, Rational> c{{0, Rational(1)}};  // mu_{k_i} = c_i h^i lambda
    Polynomial hi(1);
    for (int k = base + 1; k <= D; ++k) {
        Polynomial m = get(k);
        if ((k - base) % R != 0) {
            if (!m.is_zero()) {
                out.obstruction_degree = k;
                return out;
            }
            continue;
        }
        const int i = (k - base) / R;
        hi = hi * h;
        Polynomial dir = hi * lambda;
        const auto& [mono, coef] = *dir.terms().begin();
        Rational ci = m.coeff(mono.i, mono.j) / coef;
        if (!(m == dir * ci)) {
            out.obstruction_degree = k;
            return out;
        }
        c[i] = ci;
        // b_{i+1} from A h w' f = w g, coefficient of h^{i+1}.
        const int n = i + 1;
        Rational acc(0);
        for (int q = 1; q <= n - 1; ++q)
            acc += out.b[n - q] * c[q] * (A * Rational(n - q) - A - Rational(q) * Rr);
        out.b[n] = -acc / (A * Rational(n - 1));
    }
    return out;
}

AiifLeadingPart aiif_leading_part(const NormalFormResult& nf, const PlanarField& original) {
    if (!nf.N) throw PreconditionError("aiif_leading_part needs a nonzero normal form");
    const QHType& t = nf.type;
    const Weight w = t.weight();
    const int R = nf.r + t.abs();
    const int cap = nf.D + t.abs();
    const DegreeCap capW{w, cap};

    std::map<int, Polynomial> mu;
    for (const auto& [j, c] : nf.mu) mu[j] = nf.mu_poly(j);
    SeriesObstruction ob = aiif_series_obstruction(nf.h, t, mu, *nf.N, nf.D);
    if (ob.obstruction_degree)
        throw PreconditionError("no AIIF: obstruction at degree " + std::to_string(*ob.obstruction_degree));

    AiifLeadingPart out;
    out.exponent = Rational(1) + Rational(*nf.N) / Rational(R);
    const Rational inv_s = out.exponent.inverse();

    Polynomial W;
    for (const auto& [n, b] : ob.b) W += nf.h.pow(n, capW) * b;
    W = W.truncate(capW);

    const PlanarField d0 = euler_field(t);
    const DegreeCap capJ{w, cap - R};
    for (auto it = nf.steps.rbegin(); it != nf.steps.rend(); ++it) {
        const NormalFormStep& st = *it;
        const Polynomial Y1 = -st.p.dy() + st.xi * d0.p;
        const Polynomial Y2 = st.p.dx() + st.xi * d0.q;
        const Polynomial a = Y1.dx(), b = Y1.dy(), c = Y2.dx(), d = Y2.dy();
        const Polynomial delta = a + d + a * d - b * c;
        // J = det(DPhi)/(1+rho), and W_prev(Phi(u)) = W(u) * J(u)^(1/s)
        Polynomial J = multiply_truncated(Polynomial(1) + delta, series_inverse(Polynomial(1) + st.rho, capJ), capJ);
        Polynomial Z = multiply_truncated(W, series_power(J - Polynomial(1), inv_s, capJ), capW);

        // u = x - Y(u) by fixed-point iteration.
        const DegreeCap c1{w, cap + t.t1()}, c2{w, cap + t.t2()};
        Polynomial U1 = Polynomial::x(), U2 = Polynomial::y();
        for (;;) {
            Polynomial n1 = (Polynomial::x() - Y1.compose(U1, U2, c1)).truncate(c1);
            Polynomial n2 = (Polynomial::y() - Y2.compose(U1, U2, c2)).truncate(c2);
            if (n1 == U1 && n2 == U2) break;
            U1 = std::move(n1);
            U2 = std::move(n2);
        }
        W = Z.compose(U1, U2, capW);
    }
    out.W = W;
    out.verified = verify_power_iif(original, {W, out.exponent}, nf.D + R, t).ok;
    return out;
}

}  // namespace qhflow
