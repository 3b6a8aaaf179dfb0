#pragma once

#include "qhflow/errors.hpp"
#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"

#include <optional>

namespace qhflow {

struct IifCandidate {
    Polynomial w;
    Rational s{1};
};

struct IifCheck {
    bool ok = false;
    Polynomial defect;
};

// s*L_F(W) - div(F)*W, checked exactly or up to a weighted truncation degree.
IifCheck verify_power_iif(const PlanarField& f, const IifCandidate& cand,
                          std::optional<int> truncate = std::nullopt,
                          const QHType& t = QHType(1, 1));

// L_F(v) - div(F)*v
IifCheck verify_polynomial_iif(const PlanarField& f, const Polynomial& v);

class NotClosed : public Error {
public:
    NotClosed(const std::string& what, Polynomial defect, int degree)
        : Error(what), defect_(std::move(defect)), degree_(degree) {}
    const Polynomial& defect() const { return defect_; }
    int degree() const { return degree_; }

private:
    Polynomial defect_;
    int degree_;
};

// Truncated 1/u for a unit u, by total or weighted degree.
Polynomial series_inverse(const Polynomial& u, const DegreeCap& cap);
// (1+d)^a with d(0,0) = 0.
Polynomial series_power(const Polynomial& d, const Rational& a, const DegreeCap& cap);

// H with H_x = Q/v, H_y = -P/v through total degree D, H(0,0) = 0.
Polynomial first_integral_truncated(const PlanarField& f, const Polynomial& v, int D);

}  // namespace qhflow
