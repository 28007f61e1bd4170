#include "fglh/report.hpp"

#include "fglh/error.hpp"
#include "fglh/logarithm.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

namespace fglh {

namespace {

using nlohmann::json;

struct Context {
    const Workspace& ws;
    const RunOptions& opts;
    int degree;
};

std::string text(const GradedPoly& p, int legs)
{
    return to_string(p, PrintStyle{legs, default_var_names()});
}

std::string text(const TruncSeries& s)
{
    return to_string(s);
}

std::string text(const TensorElem& e)
{
    return text(e.body(), e.legs());
}

const HopfSection& hopf_section(const Context& c, const std::string& name)
{
    const HopfSection* h = c.ws.find_hopf(name);
    if (!h)
        throw InputError("no [hopf " + name + "] section");
    return *h;
}

const FglSection& fgl_section(const Context& c, const std::string& name)
{
    const FglSection* f = c.ws.find_fgl(name);
    if (!f)
        throw InputError("no [fgl " + name + "] section");
    return *f;
}

void prefixed(std::vector<CheckResult>& out, const std::vector<CheckResult>& in, const std::string& prefix)
{
    for (CheckResult r : in) {
        r.name = prefix + r.name;
        out.push_back(std::move(r));
    }
}

void check_hopf(const Context& c, const std::string& name, ReportSection& s)
{
    const ValidationReport v = validate_hopf(hopf_section(c, name).presentation, c.degree);
    s.checks = v.checks;
    s.values["cocommutative"] = v.cocommutative;
}

/// Builds the group; a Hopf algebra that fails validation fails the section.
std::optional<FormalGroupH> group(const Context& c, const std::string& name, ReportSection& s)
{
    const FglSection& f = fgl_section(c, name);
    const HopfSection& h = hopf_section(c, f.hopf);
    HopfPtr H;
    try {
        H = HopfAlgebra::create(h.presentation, c.degree);
    } catch (const HopfValidationError& e) {
        prefixed(s.checks, e.report().checks, "hopf.");
        return std::nullopt;
    }
    return FormalGroupH(H, fgl_body(f, h.table, c.degree), fgl_theta(f, h.table, c.degree));
}

void check_fgl(const Context&, const FormalGroupH& G, ReportSection& s)
{
    const AxiomReport r = check_axioms(G);
    s.checks = r.checks;
    if (r.theta)
        s.values["theta"] = text(*r.theta);
}

void theta(const Context&, const FormalGroupH& G, ReportSection& s)
{
    const TruncSeries th = G.theta() ? *G.theta() : solve_theta(G);
    s.values["source"] = G.theta() ? "workspace" : "solved";
    s.values["theta"] = text(th);
    s.checks = check_inverse(G, th);
}

void base(const Context&, const FormalGroupH& G, ReportSection& s)
{
    const BaseGroupResult b = base_group(G);
    s.checks = b.checks;
    s.values["F"] = text(b.F.series());
    if (b.theta)
        s.values["theta"] = text(*b.theta);
}

void gseries(const Context&, const FormalGroupH& G, ReportSection& s)
{
    s.values["g"] = text(g_series(G));
    s.values["g_mirror"] = text(g_series_mirror(G));
}

void g_identity(const Context&, const FormalGroupH& G, ReportSection& s)
{
    s.checks.push_back(check_g_identity(G));
}

void power_cmd(const Context& c, const FormalGroupH& G, ReportSection& s)
{
    const PowerResult p = fgl_power(G, c.opts.n);
    s.values["n"] = c.opts.n;
    s.values["series"] = text(p.group.series());
    s.checks = p.report.checks;
}

void log_cmd(const Context&, const FormalGroupH& G, ReportSection& s)
{
    const TruncSeries a = omega_from_derivative(G), b = omega_from_coefficients(G);
    s.checks.push_back(residual_check("omega.routes", a.body() - b.body(), PrintStyle{1, default_var_names()}));
    const Rational lead = a.body().constant_term();
    s.checks.push_back(residual_check("omega.unit", GradedPoly::constant(G.table(), lead - 1)));
    s.values["omega"] = text(a);
    if (all_passed(s.checks))
        s.values["log"] = text(log_series(G));
}

/// Extracts 𝔠 and adds its checks; returns it when they pass.
std::optional<TensorElem> cocycle_of(const FormalGroupH& G, ReportSection& s)
{
    const LogData log = extract_cocycle(G);
    s.checks = log.checks;
    s.checks.push_back(check_cocycle(*G.hopf(), log.cocycle).front());
    s.values["cocycle"] = text(log.cocycle);
    if (!all_passed(s.checks))
        return std::nullopt;
    return log.cocycle;
}

json certificate_json(const InconsistencyCertificate& cert)
{
    return {{"weight", cert.weight},
            {"phi", text(cert.phi, 2)},
            {"psi", text(cert.psi, 0)},
            {"value", to_string(cert.value)}};
}

void cocycle(const Context&, const FormalGroupH& G, ReportSection& s)
{
    cocycle_of(G, s);
}

void coboundary(const Context& c, const FormalGroupH& G, ReportSection& s)
{
    const auto cc = cocycle_of(G, s);
    if (!cc)
        return;
    const HopfAlgebra& H = *G.hopf();
    const CoboundaryResult r = coboundary_solve(H, *cc, c.degree, c.opts.integrality);
    s.values["status"] = r.coboundary ? "COBOUNDARY" : "NOT-COBOUNDARY";
    s.values["decided_through_weight"] = r.coboundary ? r.degree : r.certificate->weight;
    if (r.coboundary) {
        s.values["witness"] = text(*r.witness, 1);
        s.checks.push_back(residual_check("coboundary.witness",
                                          cobar_differential(H.presentation(), *r.witness) - cc->body(),
                                          PrintStyle{2, default_var_names()}));
    } else {
        s.values["certificate"] = certificate_json(*r.certificate);
        CheckResult v = verify_certificate(H, *cc, *r.certificate)
                            ? CheckResult{"coboundary.certificate", Verdict::Pass, std::nullopt, "", ""}
                            : failed_check("coboundary.certificate", "certificate does not verify");
        s.checks.push_back(std::move(v));
    }
    if (r.integral) {
        s.values["integral"] = *r.integral;
        if (r.integral_witness)
            s.values["integral_witness"] = text(*r.integral_witness, 1);
    }
}

void trivialize_cmd(const Context&, const FormalGroupH& G, ReportSection& s)
{
    const IsoResult iso = trivialize(G);
    if (iso.refused()) {
        s.values["certificate"] = certificate_json(*iso.coboundary.certificate);
        s.checks.push_back(failed_check("trivialize", "the cocycle is not a coboundary; the group is not isomorphic "
                                                      "to x⊗1 + 1⊗x"));
        return;
    }
    s.values["phi"] = text(iso.hom->phi);
    s.values["target"] = text(iso.hom->target.series());
    s.checks = iso.checks;
}

void reconstruct_cmd(const Context&, const FormalGroupH& G, ReportSection& s)
{
    s.checks.push_back(reconstruct(G));
}

using FglRunner = std::function<void(const Context&, const FormalGroupH&, ReportSection&)>;

const std::vector<std::pair<std::string, FglRunner>>& fgl_runners()
{
    static const std::vector<std::pair<std::string, FglRunner>> runners{
        {"check-fgl", check_fgl},   {"theta", theta},           {"base", base},
        {"gseries", gseries},       {"g-identity", g_identity}, {"power", power_cmd},
        {"log", log_cmd},           {"cocycle", cocycle},       {"coboundary", coboundary},
        {"trivialize", trivialize_cmd}, {"reconstruct", reconstruct_cmd},
    };
    return runners;
}

ReportSection run_section(const Context& c, const std::string& command, const std::string& target)
{
    ReportSection s{command, target, {}, json::object(), 0};
    const auto start = std::chrono::steady_clock::now();
    if (command == "check-hopf") {
        check_hopf(c, target, s);
    } else {
        const FglRunner* runner = nullptr;
        for (const auto& [name, r] : fgl_runners())
            if (name == command)
                runner = &r;
        if (!runner)
            throw InputError("unknown command '" + command + "'");
        if (const auto G = group(c, target, s)) {
            try {
                (*runner)(c, *G, s);
            } catch (const InputError&) {
                throw;
            } catch (const Error& e) {
                s.checks.push_back(failed_check(command, e.what()));
            }
        }
    }
    s.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return s;
}

json check_json(const CheckResult& r)
{
    json j{{"name", r.name}, {"verdict", to_string(r.verdict)}};
    if (r.failed() && r.residual)
        j["residual"] = r.residual_text;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

Verdict combine(const std::vector<Verdict>& vs)
{
    bool any_pass = vs.empty();
    for (Verdict v : vs) {
        if (v == Verdict::Fail)
            return Verdict::Fail;
        any_pass = any_pass || v == Verdict::Pass;
    }
    return any_pass ? Verdict::Pass : Verdict::Skip;
}

} // namespace

Verdict ReportSection::verdict() const
{
    std::vector<Verdict> vs;
    for (const auto& c : checks)
        vs.push_back(c.verdict);
    return combine(vs);
}

Verdict Report::verdict() const
{
    std::vector<Verdict> vs;
    for (const auto& s : sections)
        vs.push_back(s.verdict());
    return combine(vs);
}

std::string workspace_hash(const Workspace& ws)
{
    const std::string canonical = print_workspace(ws);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(canonical.data(), canonical.size(), digest, &len, EVP_sha256(), nullptr))
        throw Error("SHA-256 digest failed");
    std::ostringstream out;
    out << "sha256:" << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i)
        out << std::setw(2) << int(digest[i]);
    return out.str();
}

const std::vector<std::string>& fgl_commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, r] : fgl_runners())
            v.push_back(name);
        return v;
    }();
    return names;
}

Report run(const std::string& command, const std::string& target, const Workspace& ws, const RunOptions& opts)
{
    const int degree = opts.degree.value_or(ws.degree);
    if (degree < 1)
        throw InputError("the truncation degree must be at least 1");
    const Context c{ws, opts, degree};
    Report r{degree, workspace_hash(ws), {}};
    if (command == "report") {
        if (!target.empty())
            throw InputError("report --all takes no section name");
        for (const auto& h : ws.hopfs)
            r.sections.push_back(run_section(c, "check-hopf", h.name));
        for (const auto& f : ws.fgls)
            for (const auto& cmd : fgl_commands())
                r.sections.push_back(run_section(c, cmd, f.name));
        return r;
    }
    if (target.empty())
        throw InputError("'" + command + "' needs a section name");
    r.sections.push_back(run_section(c, command, target));
    return r;
}

std::string to_json(const Report& r, bool timing)
{
    json sections = json::array();
    for (const auto& s : r.sections) {
        json checks = json::array();
        for (const auto& c : s.checks)
            checks.push_back(check_json(c));
        json j{{"command", s.command},
               {"target", s.target},
               {"verdict", to_string(s.verdict())},
               {"checks", checks},
               {"values", s.values}};
        if (timing)
            j["timing_ms"] = s.millis;
        sections.push_back(std::move(j));
    }
    const json out{{"degree", r.degree},
                   {"workspace_hash", r.workspace_hash},
                   {"verdict", to_string(r.verdict())},
                   {"sections", sections}};
    return out.dump(2) + "\n";
}

std::string to_text(const Report& r, bool timing)
{
    std::ostringstream out;
    for (const auto& s : r.sections) {
        out << s.command << " " << s.target << ": " << to_string(s.verdict());
        if (timing)
            out << " (" << std::fixed << std::setprecision(1) << s.millis << " ms)";
        out << "\n";
        for (const auto& c : s.checks) {
            out << "  " << to_string(c.verdict) << "  " << c.name;
            if (c.failed() && c.residual)
                out << "  residual: " << c.residual_text;
            if (!c.note.empty())
                out << "  (" << c.note << ")";
            out << "\n";
        }
        for (const auto& [k, v] : s.values.items())
            out << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    out << "T = " << r.degree << ", " << r.workspace_hash << "\n";
    out << "verdict: " << to_string(r.verdict()) << "\n";
    return out.str();
}

} // namespace fglh
