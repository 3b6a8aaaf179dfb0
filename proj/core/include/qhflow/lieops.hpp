#pragma once

#include "qhflow/linalg.hpp"
#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qhflow {

// h_x p_y - h_y p_x
Polynomial poisson(const Polynomial& h, const Polynomial& p);

// Coordinates of f in a monomial basis; throws if f has a monomial outside it.
Vector monomial_coords(const Polynomial& f, const std::vector<Monomial>& basis);
Polynomial from_monomial_coords(const Vector& v, const std::vector<Monomial>& basis);

struct OperatorDecomposition {
    Polynomial h;
    QHType type{1, 1};
    int r = 0;
    int j = 0;
    std::vector<Monomial> domain_basis;    // P_{j-r}
    std::vector<Monomial> codomain_basis;  // P_j
    Matrix matrix;                         // codomain rows, domain columns
    std::vector<Polynomial> range_basis;
    std::vector<Polynomial> kernel_basis;
    std::vector<Polynomial> corange_basis;
    bool cyclic = false;  // corange is h times the corange at j-(r+|t|)

    size_t rank() const { return range_basis.size(); }
};

// Lazily built decompositions of every l_j for one Hamiltonian. The corange
// at j is h*Cor(l_{j-(r+|t|)}) whenever j-(r+|t|) >= 1 and that product is a
// valid complement; otherwise the leftmost-pivot monomial complement.
class OperatorFamily {
public:
    OperatorFamily(Polynomial h, QHType t);

    const Polynomial& h() const { return h_; }
    const QHType& type() const { return t_; }
    int r() const { return r_; }

    const OperatorDecomposition& at(int j) const;

private:
    std::shared_ptr<const OperatorDecomposition> build(int j) const;

    Polynomial h_;
    QHType t_;
    int r_;
    mutable std::recursive_mutex mu_;
    mutable std::map<int, std::shared_ptr<const OperatorDecomposition>> cache_;
};

// Standalone form; h must be quasi-homogeneous.
OperatorDecomposition operator_decomposition(const Polynomial& h, const QHType& t, int j);

struct RangeSolution {
    Polynomial p;
    Polynomial residual;
    Vector residual_coords;  // coordinates in corange_basis
};

// target = l_j(p) + residual, residual in span(corange), p without kernel part.
RangeSolution solve_in_range(const OperatorDecomposition& dec, const Polynomial& target);

// Exact rank test: do `candidate` together with the range span all of P_j,
// with dimensions adding up?
bool is_complement(const OperatorDecomposition& dec, const std::vector<Polynomial>& candidate);

// [X_h, X_p]
PlanarField bracket_hamiltonian(const Polynomial& h, const Polynomial& p);
// [X_h, xi*D0]
PlanarField bracket_with_euler(const Polynomial& h, const Polynomial& xi, const QHType& t);

}  // namespace qhflow
