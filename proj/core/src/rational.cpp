#include "qhflow/rational.hpp"

#include "qhflow/errors.hpp"

#include <cctype>
#include <ostream>

namespace qhflow {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class to_mpz(std::string_view s) {
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(s)) throw ParseError("not a rational number: '" + std::string(text) + "'");
        return Rational(to_mpz(s));
    }
    auto n = trim(s.substr(0, slash));
    auto d = trim(s.substr(slash + 1));
    if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+')
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    mpz_class dz = to_mpz(d);
    if (dz == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(to_mpz(n), dz);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const { return v_.get_str(10); }

Rational Rational::inverse() const {
    if (is_zero()) throw Error("division by zero");
    mpq_class q = 1 / v_;
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r(1), b(v_);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational binomial(const Rational& a, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r = r * (a - Rational(i)) / Rational(i + 1);
    return r;
}

}  // namespace qhflow
