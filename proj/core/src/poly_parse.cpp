#include "qhflow/errors.hpp"
#include "qhflow/polynomial.hpp"

#include <cctype>

namespace qhflow {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (('*'|'/') power | power)*
// power  := atom ('^' integer)?
// atom   := integer | 'x' | 'y' | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    Polynomial expr() {
        Polynomial acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        for (;;) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                Polynomial d = power();
                if (d.size() != 1 || !d.terms().count(Monomial{0, 0}))
                    fail("division only by nonzero constants");
                acc = acc / d.constant_term();
            } else if (at_atom()) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial a = atom();
        if (eat('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            if (e > Polynomial::exponent_cap())
                throw InputTooLarge("exponent " + std::to_string(e) + " exceeds cap");
            a = a.pow(static_cast<int>(e));
        }
        return a;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return Polynomial::x();
        }
        if (c == 'y') {
            ++pos_;
            return Polynomial::y();
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Polynomial(Rational::parse(s_.substr(start, pos_ - start)));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

}  // namespace qhflow
