#pragma once

#include "qhflow/errors.hpp"
#include "qhflow/polynomial.hpp"

#include <map>
#include <set>
#include <vector>

namespace qhflow {

class QHType {
public:
    // Throws InvalidType unless t1, t2 are positive and coprime.
    QHType(int t1, int t2);

    int t1() const { return t1_; }
    int t2() const { return t2_; }
    int abs() const { return t1_ + t2_; }
    Weight weight() const { return {t1_, t2_}; }
    std::string str() const;

    friend bool operator==(const QHType&, const QHType&) = default;

private:
    int t1_, t2_;
};

int qh_degree(const Monomial& m, const QHType& t);

// Degree of a field component: P-monomials carry deg-t1, Q-monomials deg-t2.
// nullopt when the field is zero or mixes degrees.
std::optional<int> field_degree(const PlanarField& f, const QHType& t);

// All k >= 1 with P_k trivial. The default bound t1*t2-|t| is the largest
// possible gap, so the result is complete.
std::set<int> index_set_complement(const QHType& t);
std::set<int> index_set_complement(const QHType& t, int bound);

// Monomials of P_k ordered by increasing y-exponent.
std::vector<Monomial> basis(const QHType& t, int k);

// Euler field D0 = (t1 x, t2 y).
PlanarField euler_field(const QHType& t);

using GradedPoly = std::map<int, Polynomial>;
using GradedField = std::map<int, PlanarField>;

GradedPoly decompose_poly(const Polynomial& f, const QHType& t);
// Throws PreconditionError for the zero field.
GradedField decompose_field(const PlanarField& f, const QHType& t);
PlanarField recompose(const GradedField& g);
PlanarField field_component(const PlanarField& f, const QHType& t, int j);
PlanarField truncate_field(const PlanarField& f, const QHType& t, int max_degree);

class NotHamiltonian : public Error {
public:
    NotHamiltonian(const std::string& what, PlanarField residue)
        : Error(what), residue_(std::move(residue)) {}
    const PlanarField& residue() const { return residue_; }

private:
    PlanarField residue_;
};

// h with X_h = fr, fr quasi-homogeneous of degree r.
Polynomial hamiltonian_potential(const PlanarField& fr, const QHType& t);

struct SplitPair {
    Polynomial g;   // in P_{k+|t|}
    Polynomial mu;  // in P_k
};

// fk = X_g + mu*D0 for fk of degree k.
SplitPair split_conservative_dissipative(const PlanarField& fk, const QHType& t);

struct TypeCandidate {
    QHType type;
    int r;
    bool hamiltonian;  // lowest component is a Hamiltonian field
};

// Candidate types read off the lower Newton-diagram edges of the field.
std::vector<TypeCandidate> suggest_types(const PlanarField& f);

}  // namespace qhflow
