#include "qhflow/pipeline.hpp"

#include "qhflow/errors.hpp"
#include "qhflow/iifcheck.hpp"

#include <sstream>

namespace qhflow {

namespace {

void fill_normal_form(Report& rep, const NormalFormResult& nf) {
    for (const auto& [j, coords] : nf.mu) {
        const auto& cor = nf.corange(j);
        if (cor.empty()) continue;
        NormalFormEntry e;
        e.degree = j;
        for (const auto& c : cor) e.corange_basis.push_back(c.str());
        e.coefficients = coords;
        e.second_stage = nf.second_stage_mu.at(j);
        rep.normal_form.push_back(std::move(e));
    }
}

struct Prepared {
    Report rep;
    PlanarField f;
    QHType t{1, 1};
    int D = 0;
};

Prepared prepare(const SystemSpec& spec, const AnalysisConfig& cfg) {
    Prepared p;
    p.rep.tool_version = tool_version();
    p.rep.input = spec;
    p.f = spec.field();
    if (p.f.is_zero()) throw ParseError("system is identically zero");
    p.t = resolve_type(spec, &p.rep.notes);
    p.rep.type = p.t;
    GradedField g = decompose_field(p.f, p.t);
    const int r = g.begin()->first;
    p.rep.r = r;
    Polynomial h = hamiltonian_potential(g.begin()->second, p.t);
    if (r < 0) throw PreconditionError("the origin is not a singular point of the field");
    p.rep.h = h.str();
    p.rep.hypothesis = check_hypotheses(h, p.t);
    p.rep.monodromic = p.rep.hypothesis->monodromic;
    p.rep.sign = p.rep.hypothesis->sign;
    p.D = cfg.degree ? *cfg.degree : (spec.truncation_degree ? *spec.truncation_degree : default_truncation(p.t, r));
    p.rep.config.degree = p.D;
    p.rep.config.tol = cfg.tol;
    return p;
}

void run_center(Report& rep, const NormalFormResult& nf, const Verdict& v, const AnalysisConfig& cfg, bool forced) {
    const int sign = rep.sign;
    const int base = nf.r + *nf.N;
    Polynomial ht = nf.h * Rational(sign);
    Polynomial mut = nf.mu_poly(base) * Rational(sign);
    CenterReport c;
    c.mu = mut.str();
    try {
        TrigTable tab = generalized_trig(ht, nf.type, cfg.tol);
        IntegralResult I = poincare_integral(tab, mut, cfg.orbit_trace);
        c.I = I.value;
        c.error = I.abs_error_estimate;
        c.scale = I.scale;
        c.period = tab.period;
        c.level = tab.level;
        c.certificate = I.exact_zero_certificate;
        CenterVerdict cv = center_verdict(sign, I, cfg.tol);
        if (cv == CenterVerdict::Center && v.kind != VerdictKind::AIIF) {
            cv = CenterVerdict::Inconclusive;
            rep.notes.push_back("I vanishes but the normal form has further irremovable terms; higher-order return-map terms decide");
        }
        c.verdict = to_string(cv);
    } catch (const NumericalFailure& e) {
        c.verdict = to_string(CenterVerdict::Inconclusive);
        rep.notes.push_back(std::string("numerical failure in the center stage: ") + e.what());
    }
    if (sign < 0)
        rep.notes.push_back("h is negative definite: the center stage runs on -h with mu negated (time reversal)");
    rep.notes.push_back("I is taken on the level curve through (1,0); other levels rescale I by a positive factor");
    if (forced && v.kind == VerdictKind::NoAIIF && c.verdict != "Inconclusive")
        rep.notes.push_back("the focus verdict uses the first nonzero return-map term only");
    rep.center = c;
}

}  // namespace

QHType resolve_type(const SystemSpec& spec, std::vector<std::string>* notes) {
    if (spec.type) return *spec.type;
    PlanarField f = spec.field();
    if (f.is_zero()) throw ParseError("system is identically zero");
    auto cands = suggest_types(f);
    std::vector<TypeCandidate> ham;
    for (const auto& c : cands)
        if (c.hamiltonian && c.r >= 0) ham.push_back(c);
    if (ham.size() == 1) {
        if (notes)
            notes->push_back("type " + ham.front().type.str() +
                             " selected from the Newton diagram (the only edge with a Hamiltonian leading part)");
        return ham.front().type;
    }
    std::ostringstream os;
    os << "no type given and the Newton diagram does not determine one; candidates:";
    if (cands.empty()) os << " none";
    for (const auto& c : cands) os << " " << c.type.str() << (c.hamiltonian ? "[Hamiltonian]" : "");
    throw InvalidType(os.str());
}

Report check_h_report(const Polynomial& h, const QHType& t) {
    Report rep;
    rep.tool_version = tool_version();
    if (h.is_zero()) throw PreconditionError("h must be nonzero");
    auto d = h.min_degree(t.weight());
    if (!h.is_homogeneous(t.weight(), *d))
        throw PreconditionError("h = " + h.str() + " is not quasi-homogeneous of type " + t.str());
    rep.input = SystemSpec::from_field(hamiltonian_field(h), t);
    rep.type = t;
    rep.r = *d - t.abs();
    rep.h = h.str();
    rep.hypothesis = check_hypotheses(h, t);
    rep.monodromic = rep.hypothesis->monodromic;
    rep.sign = rep.hypothesis->sign;
    return rep;
}

Report classify(const SystemSpec& spec, const AnalysisConfig& cfg) {
    Prepared p = prepare(spec, cfg);
    Report& rep = p.rep;
    if (!rep.hypothesis->h1 || !rep.hypothesis->h2) return rep;

    NormalFormResult nf = second_stage(normal_form(p.f, p.t, p.D, {.check_hypotheses = false}));
    fill_normal_form(rep, nf);
    Verdict v = classify_aiif(nf);
    rep.verdict = v;
    rep.notes.push_back("verdicts hold up to quasi-homogeneous degree D = " + std::to_string(p.D));
    if (v.kind == VerdictKind::AIIF && cfg.leading_part) {
        AiifLeadingPart lp = aiif_leading_part(nf, p.f);
        rep.aiif = AiifReport{lp.exponent, lp.W.str(), lp.verified};
    }
    if (rep.monodromic && v.kind == VerdictKind::AIIF) run_center(rep, nf, v, cfg, false);
    return rep;
}

Report center(const SystemSpec& spec, const AnalysisConfig& cfg) {
    Prepared p = prepare(spec, cfg);
    Report& rep = p.rep;
    if (!rep.hypothesis->h1 || !rep.hypothesis->h2) return rep;
    if (!rep.monodromic)
        throw PreconditionError("h = " + rep.h +
                                " vanishes away from the origin, so the origin is not monodromic");
    NormalFormResult nf = second_stage(normal_form(p.f, p.t, p.D, {.check_hypotheses = false}));
    fill_normal_form(rep, nf);
    Verdict v = classify_aiif(nf);
    rep.verdict = v;
    if (!nf.N) {
        CenterReport c;
        c.certificate = true;
        c.verdict = to_string(CenterVerdict::Center);
        rep.center = c;
        rep.notes.push_back("all normal-form coefficients vanish up to degree " + std::to_string(p.D) +
                            ": formally integrable to that order");
        return rep;
    }
    run_center(rep, nf, v, cfg, true);
    return rep;
}

IifVerification verify_iif(const SystemSpec& spec, const Polynomial& w, const Rational& s) {
    IifVerification out;
    IifCheck chk = verify_power_iif(spec.field(), {w, s});
    out.ok = chk.ok;
    out.defect = chk.defect;
    if (!chk.ok) out.lowest_defect_degree = chk.defect.min_degree(Weight::total());
    return out;
}

int report_exit_code(const Report& r) {
    if (r.hypothesis && (!r.hypothesis->h1 || !r.hypothesis->h2)) return 3;
    if (r.center && r.center->verdict == "Inconclusive") return 4;
    return 0;
}

}  // namespace qhflow
