#pragma once

#include "qhflow/lieops.hpp"
#include "qhflow/polynomial.hpp"
#include "qhflow/qhgrade.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qhflow {

// One near-identity step x = u + Y(u), Y = X_p + xi*D0, with time factor 1+rho.
struct NormalFormStep {
    int k = 0;
    Polynomial p;    // P_{k-r+|t|}
    Polynomial xi;   // P_{k-r}
    Polynomial rho;  // P_{k-r}
    bool trivial() const { return p.is_zero() && xi.is_zero() && rho.is_zero(); }
    friend bool operator==(const NormalFormStep&, const NormalFormStep&) = default;
};

struct NormalFormResult {
    Polynomial h;
    QHType type{1, 1};
    int r = 0;
    int D = 0;
    std::shared_ptr<const OperatorFamily> operators;
    std::map<int, Vector> mu;                // coordinates in Cor(l_j), r < j <= D
    std::vector<NormalFormStep> steps;       // non-trivial steps only
    std::map<int, Vector> second_stage_mu;   // filled by second_stage
    std::map<int, Rational> second_stage_alpha;  // multiple of proj(mu_{r+N} h^l) removed
    std::optional<int> N;
    PlanarField reduced;                     // transformed field, truncated at D

    const std::vector<Polynomial>& corange(int j) const { return operators->at(j).corange_basis; }
    Polynomial mu_poly(int j) const;
    Polynomial second_stage_poly(int j) const;
};

struct NormalFormOptions {
    bool check_hypotheses = true;
};

// r + 2(r+|t|) + max(gaps U {0})
int default_truncation(const QHType& t, int r);

// Orbital normal form X_h + sum mu_k D0 up to field degree D.
NormalFormResult normal_form(const PlanarField& f, const QHType& t, int D,
                             const NormalFormOptions& opts = {});

// Applies one recorded step to f exactly, keeping field degrees <= D.
PlanarField apply_step(const PlanarField& f, const QHType& t, const NormalFormStep& step, int r, int D);

NormalFormResult second_stage(const NormalFormResult& nf);

enum class VerdictKind { IntegrableUpToD, AIIF, NoAIIF };

struct Verdict {
    VerdictKind kind = VerdictKind::IntegrableUpToD;
    std::optional<int> N;
    std::optional<Rational> exponent;  // 1 + N/(r+|t|)
    std::optional<int> witness_degree;
    bool formal_iif = false;
    int D = 0;
    std::vector<std::string> notes;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(VerdictKind k);

Verdict classify_aiif(const NormalFormResult& nf);

struct SeriesObstruction {
    std::map<int, Rational> b;  // b_1 = 1
    std::optional<int> obstruction_degree;
};

// Solves the recursion for w(h) = sum b_j h^j with w^s an inverse integrating
// factor of X_h + mu*D0. mu maps degree -> polynomial.
SeriesObstruction aiif_series_obstruction(const Polynomial& h, const QHType& t,
                                          const std::map<int, Polynomial>& mu, int N, int D);

struct AiifLeadingPart {
    Polynomial W;  // truncated at D+|t|
    Rational exponent;
    bool verified = false;  // power-IIF identity holds up to degree D+r+|t|
};

// W pulled back to the original coordinates. Precondition: classify_aiif gave AIIF.
AiifLeadingPart aiif_leading_part(const NormalFormResult& nf, const PlanarField& original);

}  // namespace qhflow
