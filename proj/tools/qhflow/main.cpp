#include "qhflow/qhflow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace qhflow;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kHypothesis = 3;
constexpr int kInconclusive = 4;
constexpr int kInternal = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

QHType parse_type(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidType("type must be given as t1,t2");
    try {
        size_t a = 0, b = 0;
        int t1 = std::stoi(s.substr(0, comma), &a);
        int t2 = std::stoi(s.substr(comma + 1), &b);
        if (a != comma || b != s.size() - comma - 1) throw InvalidType("type must be given as t1,t2");
        return QHType(t1, t2);
    } catch (const std::logic_error&) {
        throw InvalidType("type must be given as t1,t2");
    }
}

// A polynomial given inline or as a file holding the polynomial text.
Polynomial poly_arg(const std::string& s) {
    std::ifstream in(s);
    if (in) {
        std::ostringstream os;
        os << in.rdbuf();
        return parse_polynomial(os.str());
    }
    return parse_polynomial(s);
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidType*>(&e) ||
        dynamic_cast<const InputTooLarge*>(&e))
        return kInvalid;
    if (dynamic_cast<const HypothesisError*>(&e) || dynamic_cast<const NotHamiltonian*>(&e) ||
        dynamic_cast<const PreconditionError*>(&e))
        return kHypothesis;
    if (dynamic_cast<const NumericalFailure*>(&e)) return kInconclusive;
    return kInternal;
}

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

struct Common {
    std::optional<int> degree;
    double tol = 1e-10;
    std::string format = "json";
    std::string emit_orbit;
    bool batch = false;
    std::vector<std::string> files;
};

std::string render(const Report& r, const std::string& format) {
    return format == "text" ? report_to_text(r) : report_to_json(r) + "\n";
}

Outcome analyze(const std::string& path, const Common& c, bool center_mode) {
    Outcome o;
    try {
        SystemSpec spec = parse_system_json(read_file(path));
        AnalysisConfig cfg;
        cfg.degree = c.degree;
        cfg.tol = c.tol;
        std::vector<OrbitRow> trace;
        if (!c.emit_orbit.empty()) cfg.orbit_trace = &trace;
        Report r = center_mode ? center(spec, cfg) : classify(spec, cfg);
        if (!c.emit_orbit.empty()) {
            std::ofstream csv(c.emit_orbit);
            if (!csv) throw ParseError("cannot write " + c.emit_orbit);
            write_orbit_csv(csv, trace, r.center ? r.center->mu : "mu");
        }
        o.code = report_exit_code(r);
        o.out = render(r, c.format);
    } catch (const std::exception& e) {
        o.code = exit_code_for(e);
        o.err = e.what();
    }
    return o;
}

int thread_cap() {
    if (const char* env = std::getenv("QHFLOW_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::logic_error&) {
        }
        std::cerr << "qhflow: ignoring QHFLOW_THREADS=" << env << "\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_systems(const Common& c, bool center_mode) {
    if (!c.batch) {
        if (c.files.size() != 1) {
            std::cerr << "qhflow: expected one system file (use --batch for several)\n";
            return kInvalid;
        }
        Outcome o = analyze(c.files.front(), c, center_mode);
        std::cout << o.out;
        if (!o.err.empty()) std::cerr << "qhflow: " << o.err << "\n";
        return o.code;
    }
    if (!c.emit_orbit.empty()) {
        std::cerr << "qhflow: --emit-orbit needs a single system\n";
        return kInvalid;
    }
    std::vector<Outcome> results(c.files.size());
    std::atomic<size_t> next{0};
    const int n = std::min<int>(thread_cap(), static_cast<int>(c.files.size()));
    std::vector<std::thread> pool;
    Common single = c;
    single.format = "json";
    for (int i = 0; i < n; ++i)
        pool.emplace_back([&] {
            for (size_t k; (k = next++) < c.files.size();) results[k] = analyze(c.files[k], single, center_mode);
        });
    for (auto& t : pool) t.join();

    // results stay in input order so the output does not depend on scheduling
    int worst = 0;
    json arr = json::array();
    for (size_t k = 0; k < c.files.size(); ++k) {
        const Outcome& o = results[k];
        json e = {{"file", c.files[k]}, {"exit_code", o.code}};
        if (o.err.empty())
            e["report"] = json::parse(o.out);
        else
            e["error"] = o.err;
        arr.push_back(std::move(e));
        worst = std::max(worst, o.code);
    }
    if (c.format == "text") {
        for (size_t k = 0; k < c.files.size(); ++k) {
            std::cout << "== " << c.files[k] << " (exit " << results[k].code << ")\n";
            if (results[k].err.empty())
                std::cout << report_to_text(report_from_json(results[k].out));
            else
                std::cout << "error: " << results[k].err << "\n";
        }
    } else {
        std::cout << arr.dump(2) << "\n";
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal forms, inverse integrating factors and center tests for planar fields"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    std::string type_s;
    int degree = 0;
    std::string format = "json";
    const auto formats = CLI::IsMember({"json", "text"});

    auto* bases = app.add_subcommand("bases", "monomial basis of the quasi-homogeneous polynomials of a degree");
    bases->add_option("--type", type_s, "t1,t2")->required();
    bases->add_option("--degree", degree, "quasi-homogeneous degree")->required();
    bases->add_option("--format", format)->check(formats);

    std::optional<int> bound;
    auto* iset = app.add_subcommand("index-set", "degrees j for which no monomial of degree j exists");
    iset->add_option("--type", type_s, "t1,t2")->required();
    iset->add_option("--bound", bound, "largest degree listed (default covers the whole finite set)");
    iset->add_option("--format", format)->check(formats);

    std::string h_s;
    auto* checkh = app.add_subcommand("check-h", "H1, H2, monodromy and n0 for a quasi-homogeneous h");
    checkh->add_option("hamiltonian", h_s, "h as a polynomial or a file holding it")->required();
    checkh->add_option("--type", type_s, "t1,t2")->required();
    checkh->add_option("--format", format)->check(formats);

    Common common;
    auto add_system_opts = [&](CLI::App* sub) {
        sub->add_option("files", common.files, "system JSON file(s)")->required();
        sub->add_option("--degree", common.degree, "truncation degree D");
        sub->add_option("--tol", common.tol, "quadrature and event tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--format", common.format)->check(formats);
        sub->add_option("--emit-orbit", common.emit_orbit, "write the sampled orbit as CSV");
        sub->add_flag("--batch", common.batch, "analyze several files concurrently (QHFLOW_THREADS caps the pool)");
    };
    auto* cls = app.add_subcommand("classify", "normal form, AIIF verdict and, when it applies, the center stage");
    add_system_opts(cls);
    auto* cen = app.add_subcommand("center", "center or focus from the Poincare integral");
    add_system_opts(cen);

    std::string sys_file, w_s, exp_s;
    auto* viif = app.add_subcommand("verify-iif", "exact check that W^s is an inverse integrating factor");
    viif->add_option("file", sys_file, "system JSON file")->required();
    viif->add_option("--w", w_s, "W as a polynomial or a file holding it")->required();
    viif->add_option("--exponent", exp_s, "s as p/q")->required();
    viif->add_option("--format", format)->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*bases) {
            QHType t = parse_type(type_s);
            auto b = basis(t, degree);
            std::vector<std::string> names;
            for (const auto& m : b) names.push_back(Polynomial::monomial(m.i, m.j).str());
            if (format == "text") {
                for (size_t k = 0; k < names.size(); ++k) std::cout << (k ? " " : "") << names[k];
                std::cout << "\n";
            } else {
                json j = {{"type", {t.t1(), t.t2()}}, {"degree", degree}, {"basis", names}};
                std::cout << j.dump(2) << "\n";
            }
            return kOk;
        }
        if (*iset) {
            QHType t = parse_type(type_s);
            auto s = bound ? index_set_complement(t, *bound) : index_set_complement(t);
            if (format == "text") {
                std::cout << "{";
                bool first = true;
                for (int j : s) {
                    std::cout << (first ? "" : ",") << j;
                    first = false;
                }
                std::cout << "}\n";
            } else {
                json j = {{"type", {t.t1(), t.t2()}}, {"index_set", s}};
                std::cout << j.dump(2) << "\n";
            }
            return kOk;
        }
        if (*checkh) {
            QHType t = parse_type(type_s);
            Report r = check_h_report(poly_arg(h_s), t);
            std::cout << render(r, format);
            return report_exit_code(r);
        }
        if (*cls) return run_systems(common, false);
        if (*cen) return run_systems(common, true);
        if (*viif) {
            SystemSpec spec = parse_system_json(read_file(sys_file));
            Polynomial w = poly_arg(w_s);
            Rational s = Rational::parse(exp_s);
            IifVerification v = verify_iif(spec, w, s);
            if (format == "text") {
                std::cout << (v.ok ? "ok" : "fails") << "\n";
                if (!v.ok) std::cout << "defect " << v.defect.str() << "\n";
            } else {
                json j = {{"schema_version", 1},
                          {"tool_version", tool_version()},
                          {"W", w.str()},
                          {"exponent", {{"exact", s.str()}}},
                          {"ok", v.ok},
                          {"defect", v.defect.str()}};
                if (v.lowest_defect_degree) j["lowest_defect_degree"] = *v.lowest_defect_degree;
                std::cout << j.dump(2) << "\n";
            }
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "qhflow: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kInternal;
}
