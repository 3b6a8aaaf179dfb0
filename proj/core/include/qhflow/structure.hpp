#pragma once

#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"

#include <vector>

namespace qhflow {

// h = x^i0 y^j0 * sum_j q_j x^{t2(K-j)} y^{t1 j}
struct UnivariateReduction {
    int i0 = 0;
    int j0 = 0;
    Polynomial q;  // univariate in the first variable
    int K = 0;
};

UnivariateReduction univariate_reduction(const Polynomial& h, const QHType& t);
Polynomial reconstruct(const UnivariateReduction& u, const QHType& t);

bool check_h1(const Polynomial& h, const QHType& t);

struct H2Result {
    bool ok = true;
    std::vector<int> checked;
    std::vector<int> failed;
};

// h*P_j must complement Range(l_{r+|t|+j}) for j in {1..r} and for j > r
// with P_{j-r} trivial; cyclicity covers every other j.
H2Result check_h2(const Polynomial& h, const QHType& t);

struct Monodromy {
    bool monodromic = false;
    int sign = 0;
};

Monodromy is_monodromic(const Polynomial& h, const QHType& t);

int compute_n0(const QHType& t, int r);

struct HypothesisReport {
    bool h1 = false;
    bool h2 = false;
    std::vector<int> h2_checked_degrees;
    std::vector<int> h2_failed_degrees;
    bool monodromic = false;
    int sign = 0;
    int n0 = 0;
    friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

HypothesisReport check_hypotheses(const Polynomial& h, const QHType& t);

}  // namespace qhflow
