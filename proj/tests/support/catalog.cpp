#include "support/catalog.hpp"

namespace qhflow::testing {

std::vector<CorangeRow> corange_table_cusp() {
    return {
        {6, {"x^2"}},   {7, {"x*y"}},  {8, {}},       {9, {}},        {10, {"x^2*y"}},
        {11, {}},       {12, {"h"}},   {13, {}},      {14, {}},       {15, {"x*h"}},
        {16, {"y*h"}},  {17, {}},      {18, {"x^2*h"}}, {19, {"x*y*h"}}, {22, {"x^2*y*h"}},
    };
}

std::vector<CorangeRow> corange_table_quartic() {
    return {
        {3, {"x^2*y", "x*y^2"}},
        {4, {"x^2*y^2", "h"}},
        {5, {"x*h", "y*h"}},
        {6, {"x^2*h", "x*y*h", "y^2*h"}},
    };
}

std::vector<CatalogPair> exponent_catalog() {
    std::vector<CatalogPair> out;
    const Polynomial hc = parse_polynomial("x^4/4 - y^3/3");
    const QHType tc(3, 4);
    struct Item {
        const char* label;
        const char* mu;  // before the factor h^j
        int n;           // N at j = 0
        Rational frac;   // listed exponent is 1 + j + frac
    };
    const std::vector<Item> cusp = {
        {"cusp item 2", "x^2", 1, Rational(1, 12)},   {"cusp item 3", "x*y", 2, Rational(1, 6)},
        {"cusp item 4", "x^2*y", 5, Rational(5, 12)}, {"cusp item 5", "x^4/4 - y^3/3", 7, Rational(7, 12)},
        {"cusp item 6", "x*(x^4/4 - y^3/3)", 10, Rational(10, 12)},
        {"cusp item 7", "y*(x^4/4 - y^3/3)", 11, Rational(11, 12)},
    };
    for (int j = 0; j <= 1; ++j)
        for (const auto& it : cusp)
            out.push_back({std::string(it.label) + " j=" + std::to_string(j), hc, tc,
                           parse_polynomial(it.mu) * hc.pow(j), it.n + 12 * j, Rational(1 + j) + it.frac});

    const Polynomial hq = parse_polynomial("(x^4+y^4)/4");
    const QHType tq(1, 1);
    const std::vector<Item> quartic = {
        {"quartic item 2", "x^2*y + 2*x*y^2", 1, Rational(5, 4)},
        {"quartic item 3", "(x^4+y^4)/4 - 3*x^2*y^2", 2, Rational(3, 2)},
        {"quartic item 4", "(2*x - y)*(x^4+y^4)/4", 3, Rational(7, 4)},
        {"quartic item 5", "(x^2 + x*y - 3*y^2)*(x^4+y^4)/4", 4, Rational(2)},
    };
    for (int j = 0; j <= 1; ++j)
        for (const auto& it : quartic)
            out.push_back({std::string(it.label) + " j=" + std::to_string(j), hq, tq,
                           parse_polynomial(it.mu) * hq.pow(j), it.n + 4 * j, Rational(1 + j) + it.frac});
    return out;
}

PlanarField with_dissipation(const Polynomial& h, const QHType& t, const Polynomial& mu) {
    return hamiltonian_field(h) + mu * euler_field(t);
}

PlanarField moussu_system(const Rational& c3, const Rational& c4) {
    auto m = [](int i, int j, const Rational& c) { return Polynomial::monomial(i, j, c); };
    return {m(0, 3, 1), m(3, 0, -1) + m(2, 2, c3) + m(1, 3, c4)};
}

PlanarField cusp_system(const CuspCoefficients& c) {
    auto m = [](int i, int j, const Rational& v) { return Polynomial::monomial(i, j, v); };
    return {m(0, 2, 1) + m(3, 0, c.a30) + m(2, 1, c.a21) + m(1, 2, c.a12) + m(0, 3, c.a03),
            m(3, 0, 1) + m(2, 1, c.b21) + m(1, 2, c.b12) + m(0, 3, c.b03)};
}

}  // namespace qhflow::testing
