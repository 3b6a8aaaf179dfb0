#pragma once

#include "qhflow/polynomial.hpp"

#include <optional>
#include <vector>

// Univariate polynomials are carried as Polynomial in the first variable
// (every exponent of y must be zero).
namespace qhflow {

using Dense = std::vector<Rational>;  // Dense[k] is the coefficient of s^k

Dense to_dense(const Polynomial& u);
Polynomial from_dense(const Dense& d);

// Distinct real roots in (lo, hi]; nullopt means an infinite endpoint.
int sturm_real_root_count(const Polynomial& u, const std::optional<Rational>& lo = std::nullopt,
                          const std::optional<Rational>& hi = std::nullopt);

// Monic gcd; throws when both arguments are zero.
Polynomial univariate_gcd(const Polynomial& u, const Polynomial& v);

}  // namespace qhflow
