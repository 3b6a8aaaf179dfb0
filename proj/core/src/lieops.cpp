#include "qhflow/lieops.hpp"

#include "qhflow/errors.hpp"

#include <algorithm>

namespace qhflow {

Polynomial poisson(const Polynomial& h, const Polynomial& p) {
    return h.dx() * p.dy() - h.dy() * p.dx();
}

Vector monomial_coords(const Polynomial& f, const std::vector<Monomial>& basis) {
    Vector v(basis.size());
    size_t found = 0;
    for (size_t k = 0; k < basis.size(); ++k) {
        v[k] = f.coeff(basis[k].i, basis[k].j);
        if (!v[k].is_zero()) ++found;
    }
    if (found != f.size()) throw PreconditionError("polynomial " + f.str() + " leaves the monomial basis");
    return v;
}

Polynomial from_monomial_coords(const Vector& v, const std::vector<Monomial>& basis) {
    Polynomial p;
    for (size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k].i, basis[k].j, v[k]);
    return p;
}

namespace {

int hamiltonian_r(const Polynomial& h, const QHType& t) {
    if (h.is_zero()) throw PreconditionError("Hamiltonian must be nonzero");
    auto d = h.min_degree(t.weight());
    if (!h.is_homogeneous(t.weight(), *d))
        throw PreconditionError("Hamiltonian " + h.str() + " is not quasi-homogeneous of type " + t.str());
    return *d - t.abs();
}

Matrix columns_of(const std::vector<Polynomial>& polys, const std::vector<Monomial>& basis) {
    std::vector<Vector> cols;
    for (const auto& p : polys) cols.push_back(monomial_coords(p, basis));
    return Matrix::from_columns(basis.size(), cols);
}

}  // namespace

bool is_complement(const OperatorDecomposition& dec, const std::vector<Polynomial>& candidate) {
    const size_t n = dec.codomain_basis.size();
    if (dec.rank() + candidate.size() != n) return false;
    for (const auto& c : candidate)
        if (!c.is_homogeneous(dec.type.weight(), dec.j)) return false;
    std::vector<Polynomial> all = dec.range_basis;
    all.insert(all.end(), candidate.begin(), candidate.end());
    if (all.empty()) return n == 0;
    return rank(columns_of(all, dec.codomain_basis)) == n;
}

OperatorFamily::OperatorFamily(Polynomial h, QHType t)
    : h_(std::move(h)), t_(t), r_(hamiltonian_r(h_, t_)) {}

const OperatorDecomposition& OperatorFamily::at(int j) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = cache_.find(j);
    if (it != cache_.end()) return *it->second;
    auto d = build(j);
    return *cache_.emplace(j, std::move(d)).first->second;
}

std::shared_ptr<const OperatorDecomposition> OperatorFamily::build(int j) const {
    auto dec = std::make_shared<OperatorDecomposition>();
    dec->h = h_;
    dec->type = t_;
    dec->r = r_;
    dec->j = j;
    dec->domain_basis = basis(t_, j - r_);
    dec->codomain_basis = basis(t_, j);
    const size_t n = dec->codomain_basis.size();

    std::vector<Vector> cols;
    for (const auto& m : dec->domain_basis)
        cols.push_back(monomial_coords(poisson(h_, Polynomial::monomial(m.i, m.j)), dec->codomain_basis));
    dec->matrix = Matrix::from_columns(n, cols);

    Echelon e = row_reduce(dec->matrix);
    for (size_t c : e.pivots) dec->range_basis.push_back(from_monomial_coords(cols[c], dec->codomain_basis));
    for (const auto& v : nullspace(dec->matrix))
        dec->kernel_basis.push_back(from_monomial_coords(v, dec->domain_basis));

    const int step = r_ + t_.abs();
    if (j - step >= 1) {
        std::vector<Polynomial> cand;
        for (const auto& c : at(j - step).corange_basis) cand.push_back(h_ * c);
        if (is_complement(*dec, cand)) {
            dec->corange_basis = std::move(cand);
            dec->cyclic = true;
            return dec;
        }
    }
    // Leftmost-pivot complement: pivots of [M | I] past the M block.
    Matrix id(n, n);
    for (size_t k = 0; k < n; ++k) id(k, k) = 1;
    Echelon ext = row_reduce(dec->matrix.hconcat(id));
    for (size_t c : ext.pivots) {
        if (c < dec->matrix.cols()) continue;
        const Monomial& m = dec->codomain_basis[c - dec->matrix.cols()];
        dec->corange_basis.push_back(Polynomial::monomial(m.i, m.j));
    }
    return dec;
}

OperatorDecomposition operator_decomposition(const Polynomial& h, const QHType& t, int j) {
    OperatorFamily fam(h, t);
    return fam.at(j);
}

RangeSolution solve_in_range(const OperatorDecomposition& dec, const Polynomial& target) {
    RangeSolution out;
    out.residual_coords.assign(dec.corange_basis.size(), Rational(0));
    if (target.is_zero()) return out;
    const size_t n = dec.codomain_basis.size();
    Vector b = monomial_coords(target, dec.codomain_basis);
    Matrix a = dec.matrix.hconcat(columns_of(dec.corange_basis, dec.codomain_basis));
    if (n == 0) return out;
    auto z = solve_pivot(a, b);
    if (!z) throw InternalError("range and corange fail to span P_" + std::to_string(dec.j));
    const size_t nd = dec.domain_basis.size();
    out.p = from_monomial_coords(Vector(z->begin(), z->begin() + nd), dec.domain_basis);
    for (size_t k = 0; k < dec.corange_basis.size(); ++k) {
        out.residual_coords[k] = (*z)[nd + k];
        out.residual += dec.corange_basis[k] * out.residual_coords[k];
    }
    return out;
}

PlanarField bracket_hamiltonian(const Polynomial& h, const Polynomial& p) {
    return lie_bracket(hamiltonian_field(h), hamiltonian_field(p));
}

PlanarField bracket_with_euler(const Polynomial& h, const Polynomial& xi, const QHType& t) {
    return lie_bracket(hamiltonian_field(h), xi * euler_field(t));
}

}  // namespace qhflow
