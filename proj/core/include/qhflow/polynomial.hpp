#pragma once

#include "qhflow/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qhflow {

struct Monomial {
    int i = 0;  // exponent of x
    int j = 0;  // exponent of y
    int total() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic by (i+j, i).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.i < b.i;
    }
};

// Linear weight used for truncation: deg(x^i y^j) = i*w1 + j*w2.
struct Weight {
    int w1 = 1;
    int w2 = 1;
    int of(const Monomial& m) const { return m.i * w1 + m.j * w2; }
    static Weight total() { return {1, 1}; }
};

struct DegreeCap {
    Weight weight;
    int cap;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // constant
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial monomial(int i, int j, const Rational& c = Rational(1));
    static Polynomial x() { return monomial(1, 0); }
    static Polynomial y() { return monomial(0, 1); }

    // Largest exponent accepted anywhere; exceeding it throws InputTooLarge.
    static int exponent_cap();
    static void set_exponent_cap(int cap);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Rational coeff(int i, int j) const;
    Rational constant_term() const { return coeff(0, 0); }
    void add_term(int i, int j, const Rational& c);

    int total_degree() const;  // -1 for zero
    // Min/max weighted degree; nullopt for zero.
    std::optional<int> min_degree(Weight w) const;
    std::optional<int> max_degree(Weight w) const;
    bool is_homogeneous(Weight w, int deg) const;

    Polynomial component(Weight w, int deg) const;
    Polynomial truncate(Weight w, int cap) const;
    Polynomial truncate(const DegreeCap& c) const { return truncate(c.weight, c.cap); }

    Polynomial dx() const;
    Polynomial dy() const;
    Polynomial pow(int e) const;
    Polynomial pow(int e, const DegreeCap& c) const;

    // f(X(x,y), Y(x,y)); truncated at the cap when one is supplied.
    Polynomial compose(const Polynomial& X, const Polynomial& Y,
                       const std::optional<DegreeCap>& cap = std::nullopt) const;

    // Multiplies each coefficient of x^i y^j by a^i b^j.
    Polynomial scale_vars(const Rational& a, const Rational& b) const;
    Polynomial map_coeffs(const std::function<Rational(const Monomial&, const Rational&)>& f) const;

    Rational eval(const Rational& x, const Rational& y) const;
    double eval(double x, double y) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a *= c.inverse(); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Canonical text, e.g. "1/4*x^4 + 1/4*y^4". Zero prints as "0".
    std::string str(std::string_view xname = "x", std::string_view yname = "y") const;

private:
    static void check_exponents(int i, int j);
    Terms terms_;
};

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, const DegreeCap& cap);

// Parses expressions over x, y with rational constants: "x^4/4 - y^3/3", "(x+y)^2*3/2".
Polynomial parse_polynomial(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct PlanarField {
    Polynomial p;
    Polynomial q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    PlanarField& operator+=(const PlanarField& o) { p += o.p; q += o.q; return *this; }
    PlanarField& operator-=(const PlanarField& o) { p -= o.p; q -= o.q; return *this; }
    friend PlanarField operator+(PlanarField a, const PlanarField& b) { return a += b; }
    friend PlanarField operator-(PlanarField a, const PlanarField& b) { return a -= b; }
    PlanarField operator-() const { return {-p, -q}; }
    friend PlanarField operator*(const Polynomial& s, const PlanarField& f) { return {s * f.p, s * f.q}; }
    friend PlanarField operator*(const Rational& s, const PlanarField& f) { return {f.p * s, f.q * s}; }
    friend bool operator==(const PlanarField&, const PlanarField&) = default;

    std::string str() const { return "(" + p.str() + ", " + q.str() + ")"; }
};

std::ostream& operator<<(std::ostream& os, const PlanarField& f);

// f.p*g.q - f.q*g.p
Polynomial wedge(const PlanarField& f, const PlanarField& g);
Polynomial divergence(const PlanarField& f);
Polynomial lie_derivative(const PlanarField& f, const Polynomial& v);
// (-h_y, h_x)
PlanarField hamiltonian_field(const Polynomial& h);
// Lie bracket [A,B] = DB*A - DA*B.
PlanarField lie_bracket(const PlanarField& a, const PlanarField& b);

}  // namespace qhflow
