#include "qhflow/polynomial.hpp"

#include "qhflow/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>

namespace qhflow {

namespace {
std::atomic<int> g_exponent_cap{512};
}

int Polynomial::exponent_cap() { return g_exponent_cap.load(std::memory_order_relaxed); }

void Polynomial::set_exponent_cap(int cap) {
    if (cap < 1) throw Error("exponent cap must be positive");
    g_exponent_cap.store(cap, std::memory_order_relaxed);
}

void Polynomial::check_exponents(int i, int j) {
    if (i < 0 || j < 0) throw Error("negative exponent");
    int cap = exponent_cap();
    if (i > cap || j > cap)
        throw InputTooLarge("exponent " + std::to_string(std::max(i, j)) + " exceeds cap " +
                            std::to_string(cap));
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

Polynomial Polynomial::monomial(int i, int j, const Rational& c) {
    Polynomial p;
    p.add_term(i, j, c);
    return p;
}

Rational Polynomial::coeff(int i, int j) const {
    auto it = terms_.find(Monomial{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    check_exponents(i, j);
    auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

std::optional<int> Polynomial::min_degree(Weight w) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int k = w.of(m);
        if (!d || k < *d) d = k;
    }
    return d;
}

std::optional<int> Polynomial::max_degree(Weight w) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int k = w.of(m);
        if (!d || k > *d) d = k;
    }
    return d;
}

bool Polynomial::is_homogeneous(Weight w, int deg) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return w.of(t.first) == deg; });
}

Polynomial Polynomial::component(Weight w, int deg) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (w.of(m) == deg) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Polynomial Polynomial::truncate(Weight w, int cap) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (w.of(m) <= cap) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Polynomial Polynomial::dx() const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.i > 0) r.add_term(m.i - 1, m.j, c * Rational(m.i));
    return r;
}

Polynomial Polynomial::dy() const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.j > 0) r.add_term(m.i, m.j - 1, c * Rational(m.j));
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    Polynomial r(1), b(*this);
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::pow(int e, const DegreeCap& cap) const {
    if (e < 0) throw Error("negative polynomial power");
    Polynomial r = Polynomial(1).truncate(cap), b = truncate(cap);
    while (e) {
        if (e & 1) r = multiply_truncated(r, b, cap);
        e >>= 1;
        if (e) b = multiply_truncated(b, b, cap);
    }
    return r;
}

Polynomial Polynomial::compose(const Polynomial& X, const Polynomial& Y,
                               const std::optional<DegreeCap>& cap) const {
    if (is_zero()) return {};
    int mi = 0, mj = 0;
    for (const auto& [m, c] : terms_) {
        mi = std::max(mi, m.i);
        mj = std::max(mj, m.j);
    }
    auto mul = [&](const Polynomial& a, const Polynomial& b) {
        return cap ? multiply_truncated(a, b, *cap) : a * b;
    };
    Polynomial one(1);
    if (cap) one = one.truncate(*cap);
    std::vector<Polynomial> xp{one}, yp{one};
    for (int k = 1; k <= mi; ++k) xp.push_back(mul(xp.back(), X));
    for (int k = 1; k <= mj; ++k) yp.push_back(mul(yp.back(), Y));

    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Polynomial t = mul(xp[m.i], yp[m.j]);
        for (const auto& [tm, tc] : t.terms_) r.add_term(tm.i, tm.j, tc * c);
    }
    return r;
}

Polynomial Polynomial::scale_vars(const Rational& a, const Rational& b) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.i, m.j, c * a.pow(m.i) * b.pow(m.j));
    return r;
}

Polynomial Polynomial::map_coeffs(
    const std::function<Rational(const Monomial&, const Rational&)>& f) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m.i, m.j, f(m, c));
    return r;
}

Rational Polynomial::eval(const Rational& x, const Rational& y) const {
    Rational s(0);
    for (const auto& [m, c] : terms_) s += c * x.pow(m.i) * y.pow(m.j);
    return s;
}

double Polynomial::eval(double x, double y) const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) s += c.to_double() * std::pow(x, m.i) * std::pow(y, m.j);
    return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
    return r;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, const DegreeCap& cap) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms()) {
        int da = cap.weight.of(ma);
        if (da > cap.cap && cap.weight.w1 >= 0 && cap.weight.w2 >= 0) continue;
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m{ma.i + mb.i, ma.j + mb.j};
            if (cap.weight.of(m) > cap.cap) continue;
            r.add_term(m.i, m.j, ca * cb);
        }
    }
    return r;
}

std::string Polynomial::str(std::string_view xname, std::string_view yname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        first = false;
        a = a.abs();
        bool constant = m.i == 0 && m.j == 0;
        bool need_star = false;
        if (constant || !a.is_one()) {
            os << a.str();
            need_star = true;
        }
        auto var = [&](std::string_view name, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        var(xname, m.i);
        var(yname, m.j);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const PlanarField& f) { return os << f.str(); }

Polynomial wedge(const PlanarField& f, const PlanarField& g) { return f.p * g.q - f.q * g.p; }

Polynomial divergence(const PlanarField& f) { return f.p.dx() + f.q.dy(); }

Polynomial lie_derivative(const PlanarField& f, const Polynomial& v) {
    return f.p * v.dx() + f.q * v.dy();
}

PlanarField hamiltonian_field(const Polynomial& h) { return {-h.dy(), h.dx()}; }

PlanarField lie_bracket(const PlanarField& a, const PlanarField& b) {
    return {lie_derivative(a, b.p) - lie_derivative(b, a.p),
            lie_derivative(a, b.q) - lie_derivative(b, a.q)};
}

}  // namespace qhflow
