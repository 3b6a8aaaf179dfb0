#include "qhflow/qhgrade.hpp"

#include "qhflow/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qhflow {

QHType::QHType(int t1, int t2) : t1_(t1), t2_(t2) {
    if (t1 < 1 || t2 < 1)
        throw InvalidType("type weights must be positive, got (" + std::to_string(t1) + "," +
                          std::to_string(t2) + ")");
    if (std::gcd(t1, t2) != 1)
        throw InvalidType("type weights must be coprime, got (" + std::to_string(t1) + "," +
                          std::to_string(t2) + ")");
}

std::string QHType::str() const { return "(" + std::to_string(t1_) + "," + std::to_string(t2_) + ")"; }

int qh_degree(const Monomial& m, const QHType& t) { return m.i * t.t1() + m.j * t.t2(); }

std::optional<int> field_degree(const PlanarField& f, const QHType& t) {
    std::optional<int> d;
    auto visit = [&](const Polynomial& p, int shift) {
        for (const auto& [m, c] : p.terms()) {
            int k = qh_degree(m, t) - shift;
            if (d && *d != k) return false;
            d = k;
        }
        return true;
    };
    if (!visit(f.p, t.t1()) || !visit(f.q, t.t2())) return std::nullopt;
    return d;
}

std::set<int> index_set_complement(const QHType& t) {
    return index_set_complement(t, std::max(0, t.t1() * t.t2() - t.abs()));
}

std::set<int> index_set_complement(const QHType& t, int bound) {
    std::set<int> out;
    for (int k = 1; k <= bound; ++k)
        if (basis(t, k).empty()) out.insert(k);
    return out;
}

std::vector<Monomial> basis(const QHType& t, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    for (int j = 0; j * t.t2() <= k; ++j) {
        int rest = k - j * t.t2();
        if (rest % t.t1() == 0) out.push_back({rest / t.t1(), j});
    }
    return out;
}

PlanarField euler_field(const QHType& t) {
    return {Polynomial::monomial(1, 0, t.t1()), Polynomial::monomial(0, 1, t.t2())};
}

GradedPoly decompose_poly(const Polynomial& f, const QHType& t) {
    GradedPoly out;
    for (const auto& [m, c] : f.terms()) out[qh_degree(m, t)].add_term(m.i, m.j, c);
    return out;
}

GradedField decompose_field(const PlanarField& f, const QHType& t) {
    if (f.is_zero()) throw PreconditionError("cannot grade the zero field");
    GradedField out;
    for (const auto& [m, c] : f.p.terms()) out[qh_degree(m, t) - t.t1()].p.add_term(m.i, m.j, c);
    for (const auto& [m, c] : f.q.terms()) out[qh_degree(m, t) - t.t2()].q.add_term(m.i, m.j, c);
    return out;
}

PlanarField recompose(const GradedField& g) {
    PlanarField f;
    for (const auto& [k, c] : g) f += c;
    return f;
}

PlanarField field_component(const PlanarField& f, const QHType& t, int j) {
    return {f.p.component(t.weight(), j + t.t1()), f.q.component(t.weight(), j + t.t2())};
}

PlanarField truncate_field(const PlanarField& f, const QHType& t, int max_degree) {
    return {f.p.truncate(t.weight(), max_degree + t.t1()), f.q.truncate(t.weight(), max_degree + t.t2())};
}

Polynomial hamiltonian_potential(const PlanarField& fr, const QHType& t) {
    auto r = field_degree(fr, t);
    if (!r) {
        if (fr.is_zero()) throw NotHamiltonian("zero leading component", fr);
        throw PreconditionError("leading component is not quasi-homogeneous of type " + t.str());
    }
    if (*r + t.abs() == 0) throw NotHamiltonian("degree -|t| component has no potential", fr);
    Polynomial h = wedge(euler_field(t), fr) / Rational(*r + t.abs());
    PlanarField residue = fr - hamiltonian_field(h);
    if (!residue.is_zero())
        throw NotHamiltonian("leading component is not Hamiltonian (divergence " +
                                 divergence(fr).str() + ")",
                             residue);
    return h;
}

SplitPair split_conservative_dissipative(const PlanarField& fk, const QHType& t) {
    if (fk.is_zero()) return {};
    auto k = field_degree(fk, t);
    if (!k) throw PreconditionError("component is not quasi-homogeneous of type " + t.str());
    if (*k + t.abs() == 0) throw PreconditionError("split undefined at degree -|t|");
    Rational inv(1, *k + t.abs());
    SplitPair s{wedge(euler_field(t), fk) * inv, divergence(fk) * inv};
    PlanarField back = hamiltonian_field(s.g) + s.mu * euler_field(t);
    if (!(back == fk)) throw InternalError("conservative/dissipative split failed to reconstruct");
    return s;
}

std::vector<TypeCandidate> suggest_types(const PlanarField& f) {
    // Support points: P-monomial x^i y^j -> (i-1, j), Q-monomial -> (i, j-1).
    std::vector<std::pair<int, int>> pts;
    for (const auto& [m, c] : f.p.terms()) pts.emplace_back(m.i - 1, m.j);
    for (const auto& [m, c] : f.q.terms()) pts.emplace_back(m.i, m.j - 1);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Keep the lowest j for each i, then build the lower convex hull.
    std::vector<std::pair<int, int>> low;
    for (const auto& p : pts)
        if (low.empty() || low.back().first != p.first) low.push_back(p);
    std::vector<std::pair<int, int>> hull;
    auto cross = [](auto o, auto a, auto b) {
        return static_cast<long>(a.first - o.first) * (b.second - o.second) -
               static_cast<long>(a.second - o.second) * (b.first - o.first);
    };
    for (const auto& p : low) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    std::vector<TypeCandidate> out;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        auto [i1, j1] = hull[k];
        auto [i2, j2] = hull[k + 1];
        int a = j1 - j2, b = i2 - i1;
        if (a <= 0 || b <= 0) continue;  // only edges with negative slope
        int g = std::gcd(a, b);
        QHType t(a / g, b / g);
        GradedField gf = decompose_field(f, t);
        int r = gf.begin()->first;
        bool ham = true;
        try {
            hamiltonian_potential(gf.begin()->second, t);
        } catch (const NotHamiltonian&) {
            ham = false;
        }
        out.push_back({t, r, ham});
    }
    return out;
}

}  // namespace qhflow
