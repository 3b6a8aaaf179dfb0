#include "qhflow/report.hpp"

#include "qhflow/errors.hpp"

#include "json.hpp"

#include <map>
#include <sstream>

#ifndef QHFLOW_VERSION
#define QHFLOW_VERSION "0.0.0"
#endif

namespace qhflow {

using nlohmann::json;

const char* tool_version() { return QHFLOW_VERSION; }

PlanarField SystemSpec::field() const {
    PlanarField f;
    for (const auto& m : P) f.p.add_term(m.x, m.y, m.c);
    for (const auto& m : Q) f.q.add_term(m.x, m.y, m.c);
    return f;
}

namespace {

std::vector<MonomialRecord> records(const Polynomial& p) {
    std::vector<MonomialRecord> out;
    for (const auto& [m, c] : p.terms()) out.push_back({m.i, m.j, c});
    return out;
}

json exact(const Rational& q) { return json{{"exact", q.str()}}; }
json approx(double v) { return json{{"approx", v}}; }

Rational get_exact(const json& j) {
    if (!j.is_object() || !j.contains("exact")) throw ParseError("expected an exact rational field");
    return Rational::parse(j.at("exact").get<std::string>());
}

double get_approx(const json& j) {
    if (!j.is_object() || !j.contains("approx")) throw ParseError("expected an approximate numeric field");
    return j.at("approx").get<double>();
}

Polynomial component_from_json(const json& j, const char* which) {
    Polynomial p;
    if (j.is_string()) return parse_polynomial(j.get<std::string>());
    if (!j.is_array()) throw ParseError(std::string("field '") + which + "' must be a list or a string");
    for (const auto& rec : j) {
        if (!rec.is_object() || !rec.contains("x") || !rec.contains("y") || !rec.contains("c"))
            throw ParseError(std::string("monomial records in '") + which + "' need x, y and c");
        const auto& jx = rec.at("x");
        const auto& jy = rec.at("y");
        if (!jx.is_number_integer() || !jy.is_number_integer())
            throw ParseError("monomial exponents must be integers");
        long x = jx.get<long>(), y = jy.get<long>();
        if (x < 0 || y < 0) throw ParseError("monomial exponents must be non-negative");
        if (x > Polynomial::exponent_cap() || y > Polynomial::exponent_cap())
            throw InputTooLarge("monomial exponent exceeds cap");
        const auto& jc = rec.at("c");
        Rational c;
        if (jc.is_string()) c = Rational::parse(jc.get<std::string>());
        else if (jc.is_number_integer()) c = Rational(jc.get<long>());
        else throw ParseError("coefficients must be rational strings such as \"3/4\" or integers");
        p.add_term(static_cast<int>(x), static_cast<int>(y), c);
    }
    return p;
}

json spec_to_json(const SystemSpec& s) {
    json j;
    if (s.name) j["name"] = *s.name;
    if (s.type) j["type"] = {s.type->t1(), s.type->t2()};
    auto recs = [](const std::vector<MonomialRecord>& v) {
        json a = json::array();
        for (const auto& m : v) a.push_back({{"x", m.x}, {"y", m.y}, {"c", m.c.str()}});
        return a;
    };
    j["P"] = recs(s.P);
    j["Q"] = recs(s.Q);
    if (s.truncation_degree) j["truncation_degree"] = *s.truncation_degree;
    return j;
}

SystemSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("system file must be a JSON object");
    SystemSpec s;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("'name' must be a string");
        s.name = j.at("name").get<std::string>();
    }
    if (j.contains("type")) {
        const auto& t = j.at("type");
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw ParseError("'type' must be a pair of integers");
        s.type = QHType(t[0].get<int>(), t[1].get<int>());
    }
    if (!j.contains("P") || !j.contains("Q")) throw ParseError("system needs both 'P' and 'Q'");
    PlanarField f{component_from_json(j.at("P"), "P"), component_from_json(j.at("Q"), "Q")};
    s.P = records(f.p);
    s.Q = records(f.q);
    if (j.contains("truncation_degree")) {
        if (!j.at("truncation_degree").is_number_integer()) throw ParseError("'truncation_degree' must be an integer");
        s.truncation_degree = j.at("truncation_degree").get<int>();
    }
    return s;
}

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(exact(q));
    return a;
}

std::vector<Rational> rationals_from(const json& a) {
    std::vector<Rational> v;
    for (const auto& e : a) v.push_back(get_exact(e));
    return v;
}

VerdictKind kind_from(const std::string& s) {
    if (s == "IntegrableUpToD") return VerdictKind::IntegrableUpToD;
    if (s == "AIIF") return VerdictKind::AIIF;
    if (s == "NoAIIF") return VerdictKind::NoAIIF;
    throw ParseError("unknown verdict kind '" + s + "'");
}

}  // namespace

SystemSpec SystemSpec::from_field(const PlanarField& f, std::optional<QHType> t, std::optional<std::string> name) {
    SystemSpec s;
    s.name = std::move(name);
    s.type = t;
    s.P = records(f.p);
    s.Q = records(f.q);
    return s;
}

SystemSpec parse_system_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return spec_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed system file: ") + e.what());
    }
}

std::string system_to_json(const SystemSpec& s) { return spec_to_json(s).dump(2); }

std::string report_to_json(const Report& r, int indent) {
    json j;
    j["schema_version"] = r.schema_version;
    j["tool_version"] = r.tool_version;
    j["input"] = spec_to_json(r.input);
    if (r.type) j["type"] = {r.type->t1(), r.type->t2()};
    if (r.r) j["r"] = *r.r;
    j["h"] = r.h;
    if (r.hypothesis) {
        const auto& hy = *r.hypothesis;
        j["hypothesis"] = {{"h1", hy.h1},
                           {"h2", hy.h2},
                           {"h2_checked_degrees", hy.h2_checked_degrees},
                           {"h2_failed_degrees", hy.h2_failed_degrees},
                           {"monodromic", hy.monodromic},
                           {"sign", hy.sign},
                           {"n0", hy.n0}};
    }
    json nf = json::array();
    for (const auto& e : r.normal_form)
        nf.push_back({{"degree", e.degree},
                      {"corange_basis", e.corange_basis},
                      {"coefficients", rationals(e.coefficients)},
                      {"second_stage", rationals(e.second_stage)}});
    j["normal_form"] = nf;
    if (r.verdict) {
        const auto& v = *r.verdict;
        json jv{{"kind", to_string(v.kind)}, {"formal_iif", v.formal_iif}, {"D", v.D}, {"notes", v.notes}};
        if (v.N) jv["N"] = *v.N;
        if (v.exponent) jv["exponent"] = exact(*v.exponent);
        if (v.witness_degree) jv["witness_degree"] = *v.witness_degree;
        j["verdict"] = jv;
    }
    if (r.aiif) j["aiif"] = {{"exponent", exact(r.aiif->exponent)}, {"W", r.aiif->W}, {"verified", r.aiif->verified}};
    j["monodromy"] = {{"monodromic", r.monodromic}, {"sign", r.sign}};
    if (r.center) {
        const auto& c = *r.center;
        j["center"] = {{"I", approx(c.I)},           {"error", approx(c.error)},
                       {"scale", approx(c.scale)},   {"period", approx(c.period)},
                       {"level", approx(c.level)},   {"certificate", c.certificate},
                       {"verdict", c.verdict},       {"mu", c.mu}};
    }
    j["notes"] = r.notes;
    j["config"] = {{"degree", r.config.degree}, {"tol", approx(r.config.tol)}};
    return j.dump(indent);
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
    try {
        Report r;
        r.schema_version = j.at("schema_version").get<int>();
        r.tool_version = j.at("tool_version").get<std::string>();
        r.input = spec_from_json(j.at("input"));
        if (j.contains("type")) r.type = QHType(j["type"][0].get<int>(), j["type"][1].get<int>());
        if (j.contains("r")) r.r = j["r"].get<int>();
        r.h = j.at("h").get<std::string>();
        if (j.contains("hypothesis")) {
            const auto& jh = j["hypothesis"];
            HypothesisReport hy;
            hy.h1 = jh.at("h1").get<bool>();
            hy.h2 = jh.at("h2").get<bool>();
            hy.h2_checked_degrees = jh.at("h2_checked_degrees").get<std::vector<int>>();
            hy.h2_failed_degrees = jh.at("h2_failed_degrees").get<std::vector<int>>();
            hy.monodromic = jh.at("monodromic").get<bool>();
            hy.sign = jh.at("sign").get<int>();
            hy.n0 = jh.at("n0").get<int>();
            r.hypothesis = hy;
        }
        for (const auto& e : j.at("normal_form")) {
            NormalFormEntry n;
            n.degree = e.at("degree").get<int>();
            n.corange_basis = e.at("corange_basis").get<std::vector<std::string>>();
            n.coefficients = rationals_from(e.at("coefficients"));
            n.second_stage = rationals_from(e.at("second_stage"));
            r.normal_form.push_back(std::move(n));
        }
        if (j.contains("verdict")) {
            const auto& jv = j["verdict"];
            Verdict v;
            v.kind = kind_from(jv.at("kind").get<std::string>());
            v.formal_iif = jv.at("formal_iif").get<bool>();
            v.D = jv.at("D").get<int>();
            v.notes = jv.at("notes").get<std::vector<std::string>>();
            if (jv.contains("N")) v.N = jv["N"].get<int>();
            if (jv.contains("exponent")) v.exponent = get_exact(jv["exponent"]);
            if (jv.contains("witness_degree")) v.witness_degree = jv["witness_degree"].get<int>();
            r.verdict = v;
        }
        if (j.contains("aiif")) {
            const auto& ja = j["aiif"];
            r.aiif = AiifReport{get_exact(ja.at("exponent")), ja.at("W").get<std::string>(),
                                ja.at("verified").get<bool>()};
        }
        r.monodromic = j.at("monodromy").at("monodromic").get<bool>();
        r.sign = j.at("monodromy").at("sign").get<int>();
        if (j.contains("center")) {
            const auto& jc = j["center"];
            CenterReport c;
            c.I = get_approx(jc.at("I"));
            c.error = get_approx(jc.at("error"));
            c.scale = get_approx(jc.at("scale"));
            c.period = get_approx(jc.at("period"));
            c.level = get_approx(jc.at("level"));
            c.certificate = jc.at("certificate").get<bool>();
            c.verdict = jc.at("verdict").get<std::string>();
            c.mu = jc.at("mu").get<std::string>();
            r.center = c;
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
        r.config.degree = j.at("config").at("degree").get<int>();
        r.config.tol = get_approx(j.at("config").at("tol"));
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    if (r.input.name) os << "system      " << *r.input.name << "\n";
    os << "field       " << r.input.field().str() << "\n";
    if (r.type) os << "type        " << r.type->str() << "\n";
    if (r.r) os << "r           " << *r.r << "\n";
    if (!r.h.empty()) os << "h           " << r.h << "\n";
    if (r.hypothesis) {
        const auto& hy = *r.hypothesis;
        os << "H1          " << (hy.h1 ? "yes" : "no") << "\n";
        os << "H2          " << (hy.h2 ? "yes" : "no") << "  (checked j =";
        for (int j : hy.h2_checked_degrees) os << " " << j;
        os << ")\n";
        os << "n0          " << hy.n0 << "\n";
    }
    os << "monodromic  " << (r.monodromic ? "yes" : "no");
    if (r.monodromic) os << "  sign " << (r.sign > 0 ? "+" : "-");
    os << "\n";
    for (const auto& e : r.normal_form) {
        bool any = false;
        for (const auto& c : e.coefficients) any = any || !c.is_zero();
        if (!any) continue;
        os << "mu[" << e.degree << "]";
        for (size_t k = 0; k < e.coefficients.size(); ++k)
            if (!e.coefficients[k].is_zero()) os << "  " << e.coefficients[k] << "*(" << e.corange_basis[k] << ")";
        os << "\n";
    }
    if (r.verdict) {
        const auto& v = *r.verdict;
        os << "verdict     " << to_string(v.kind);
        if (v.N) os << "  N=" << *v.N;
        if (v.exponent) os << "  exponent=" << *v.exponent << (v.formal_iif ? " (formal)" : "");
        if (v.witness_degree) os << "  witness degree " << *v.witness_degree;
        os << "  (up to degree " << v.D << ")\n";
    }
    if (r.aiif) os << "W           " << r.aiif->W << (r.aiif->verified ? "  [verified]" : "  [NOT verified]") << "\n";
    if (r.center) {
        const auto& c = *r.center;
        os << "center      " << c.verdict << "  I=" << c.I << " +- " << c.error
           << (c.certificate ? "  (symmetry certificate)" : "") << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace qhflow
