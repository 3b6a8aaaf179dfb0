#include "qhflow/univariate.hpp"

#include "qhflow/errors.hpp"

namespace qhflow {

namespace {

void normalize(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Dense rem(Dense a, const Dense& b) {
    normalize(a);
    const int db = static_cast<int>(b.size()) - 1;
    const Rational lead = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        Rational f = a.back() / lead;
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int k = 0; k <= db; ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        normalize(a);
    }
    return a;
}

Dense derivative(const Dense& d) {
    Dense r;
    for (size_t k = 1; k < d.size(); ++k) r.push_back(d[k] * Rational(static_cast<long>(k)));
    normalize(r);
    return r;
}

Rational eval(const Dense& d, const Rational& s) {
    Rational acc(0);
    for (auto it = d.rbegin(); it != d.rend(); ++it) acc = acc * s + *it;
    return acc;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

Dense to_dense(const Polynomial& u) {
    Dense d;
    for (const auto& [m, c] : u.terms()) {
        if (m.j != 0) throw Error("expected a univariate polynomial");
        if (static_cast<int>(d.size()) <= m.i) d.resize(m.i + 1);
        d[m.i] = c;
    }
    normalize(d);
    return d;
}

Polynomial from_dense(const Dense& d) {
    Polynomial p;
    for (size_t k = 0; k < d.size(); ++k) p.add_term(static_cast<int>(k), 0, d[k]);
    return p;
}

int sturm_real_root_count(const Polynomial& u, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi) {
    Dense p0 = to_dense(u);
    if (p0.empty()) throw Error("Sturm count of the zero polynomial");
    if (lo && hi && !(*lo < *hi)) return 0;

    std::vector<Dense> seq{p0};
    Dense p1 = derivative(p0);
    if (!p1.empty()) {
        seq.push_back(p1);
        for (;;) {
            Dense r = rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    auto signs_at = [&](const std::optional<Rational>& s, bool plus_inf) {
        std::vector<int> out;
        for (const auto& d : seq) {
            if (s) {
                out.push_back(eval(d, *s).sign());
            } else {
                int deg = static_cast<int>(d.size()) - 1;
                int lead = d.back().sign();
                out.push_back(plus_inf || deg % 2 == 0 ? lead : -lead);
            }
        }
        return out;
    };
    return variations(signs_at(lo, false)) - variations(signs_at(hi, true));
}

Polynomial univariate_gcd(const Polynomial& u, const Polynomial& v) {
    Dense a = to_dense(u), b = to_dense(v);
    if (a.empty() && b.empty()) throw Error("gcd of two zero polynomials");
    while (!b.empty()) {
        Dense r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return from_dense(a);
}

}  // namespace qhflow
