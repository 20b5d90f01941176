// Command-line front end: tabulate families, evaluate members at rational
// points, run the identity suite, and run seeded Monte-Carlo checks.
//
// Exit codes: 0 success / all pass, 1 identity failure or |z| over threshold,
// 2 usage or precondition error.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "appell/identities.hpp"
#include "appell/mc.hpp"

using namespace appell;
using nlohmann::json;

namespace {

constexpr double kZThreshold = 4.0;
constexpr std::size_t kDefaultNmaxCap = 24;

std::size_t truncation_cap() {
    const char* env = std::getenv("APPELL_NMAX");
    if (env == nullptr || *env == '\0') return kDefaultNmaxCap;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0) throw std::invalid_argument("APPELL_NMAX must be a nonnegative integer");
    return static_cast<std::size_t>(v);
}

void require_truncation(std::size_t needed) {
    std::size_t cap = truncation_cap();
    if (needed > cap)
        throw std::invalid_argument("requested degree needs series truncation " + std::to_string(needed) +
                                    " but APPELL_NMAX caps it at " + std::to_string(cap));
}

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name, bool csv_ok) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") {
        if (!csv_ok) throw std::invalid_argument("csv format is only valid for tabular commands");
        return Format::Csv;
    }
    throw std::invalid_argument("unknown format '" + name + "'");
}

struct FamilyArgs {
    std::string kind;
    std::optional<std::size_t> n;
    std::optional<std::size_t> max_n;
    std::string m_text, l_text, x_text;
    std::string format = "text";
};

FamilyId make_id(const FamilyArgs& a) {
    FamilyId id;
    id.kind = family_kind_from_name(a.kind);
    if (!a.m_text.empty()) id.m_binding = Rational::parse(a.m_text);
    if (!a.l_text.empty()) id.l_binding = Rational::parse(a.l_text);
    id.validate();
    return id;
}

json bindings_json(const FamilyId& id) {
    json b = json::object();
    if (id.m_binding) b["m"] = id.m_binding->to_string();
    if (id.l_binding) b["l"] = id.l_binding->to_string();
    return b;
}

int run_family(const FamilyArgs& a) {
    Format format = parse_format(a.format, false);
    if (a.n.has_value() == a.max_n.has_value())
        throw std::invalid_argument("family: pass exactly one of --n or --max-n");
    FamilyId id = make_id(a);
    std::size_t hi = a.n ? *a.n : *a.max_n;
    std::size_t lo = a.n ? *a.n : 0;
    require_truncation(hi);
    FamilyCatalog catalog(hi);
    json members = json::array();
    for (std::size_t k = lo; k <= hi; ++k) {
        MultiPoly p = catalog.member(id, k);
        if (format == Format::Text)
            std::cout << p.to_string() << "\n";
        else
            members.push_back({{"n", k}, {"polynomial", p.to_string()}});
    }
    if (format == Format::Json)
        std::cout << json{{"kind", a.kind}, {"bindings", bindings_json(id)}, {"members", members}}.dump() << "\n";
    return 0;
}

int run_eval(const FamilyArgs& a) {
    Format format = parse_format(a.format, false);
    if (!a.n) throw std::invalid_argument("eval: --n is required");
    if (a.x_text.empty()) throw std::invalid_argument("eval: --x is required");
    FamilyId id = make_id(a);
    require_truncation(*a.n);
    FamilyCatalog catalog(*a.n);
    MultiPoly p = catalog.member(id, *a.n).eval({{Var::x, Rational::parse(a.x_text)}});
    if (!p.is_constant())
        throw std::invalid_argument("eval: result still symbolic (" + p.to_string() + "); bind the order variables");
    Rational value = p.constant_value();
    if (format == Format::Text)
        std::cout << value.to_string() << "\n";
    else
        std::cout << json{{"kind", a.kind},
                          {"n", *a.n},
                          {"bindings", bindings_json(id)},
                          {"x", Rational::parse(a.x_text).to_string()},
                          {"value", value.to_string()}}
                         .dump()
                  << "\n";
    return 0;
}

int run_verify(const std::string& identity, std::size_t max_n, const std::string& format_name) {
    Format format = parse_format(format_name, false);
    require_truncation(max_n + 2);
    IdentitySuite suite(max_n);
    std::vector<IdentityReport> reports;
    if (identity == "all") {
        reports = suite.verify_all(max_n);
    } else {
        if (!IdentitySuite::known(identity)) throw std::invalid_argument("unknown identity '" + identity + "'");
        reports.push_back(suite.verify(identity, max_n));
    }
    bool all_pass = true;
    json out = json::array();
    for (const IdentityReport& r : reports) {
        all_pass = all_pass && r.pass;
        if (format == Format::Json) {
            out.push_back(to_json(r));
            continue;
        }
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << " n<=" << r.n_max;
        if (!r.pass)
            std::cout << ": first failing n=" << r.residuals.front().first
                      << ", residual = " << r.residuals.front().second.to_string();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f", r.elapsed_ms);
        std::cout << " (" << buf << " ms)\n";
    }
    if (format == Format::Json) std::cout << out.dump() << "\n";
    return all_pass ? 0 : 1;
}

struct McArgs {
    std::string kind;
    unsigned n = 0, m = 0, l = 0;
    std::string x_text = "0";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::string format = "json";
};

int run_mc(const McArgs& a) {
    Format format = parse_format(a.format, false);
    FamilyKind kind = family_kind_from_name(a.kind);
    if (kind != FamilyKind::Bernoulli && kind != FamilyKind::Euler)
        throw std::invalid_argument("mc: kind must be bernoulli or euler");
    McConfig cfg;
    cfg.n = a.n;
    cfg.m_int = a.m;
    cfg.l = a.l;
    cfg.x0 = Rational::parse(a.x_text);
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    require_truncation(cfg.n);
    FamilyCatalog catalog(cfg.n);
    McResult res = kind == FamilyKind::Bernoulli ? mc_check_bernoulli(cfg, catalog) : mc_check_euler(cfg, catalog);
    if (format == Format::Json) {
        json out = {{"config",
                     {{"family", a.kind},
                      {"n", cfg.n},
                      {"m", cfg.m_int},
                      {"l", cfg.l},
                      {"x0", cfg.x0.to_string()},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed}}},
                    {"estimate", res.estimate},
                    {"std_error", res.std_error},
                    {"exact", res.exact.to_string()},
                    {"z_score", res.z_score}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "estimate  = " << res.estimate << "\n"
                  << "std_error = " << res.std_error << "\n"
                  << "exact     = " << res.exact.to_string() << " (" << res.exact.to_double() << ")\n"
                  << "z_score   = " << res.z_score << "\n";
    }
    return std::abs(res.z_score) <= kZThreshold ? 0 : 1;
}

std::string csv_cell(const MultiPoly& p) {
    if (p.is_constant()) return p.constant_value().to_string();
    return "\"" + p.to_string() + "\"";
}

int run_table(const FamilyArgs& a) {
    Format format = parse_format(a.format, true);
    if (format == Format::Text) format = Format::Csv;
    if (!a.max_n) throw std::invalid_argument("table: --max-n is required");
    FamilyId id = make_id(a);
    require_truncation(*a.max_n);
    FamilyCatalog catalog(*a.max_n);
    json rows = json::array();
    for (std::size_t n = 0; n <= *a.max_n; ++n) {
        std::vector<MultiPoly> coeffs = catalog.member(id, n).coefficients_of(Var::x);
        coeffs.resize(n + 1);  // zero polynomial rows still get n+1 cells
        if (format == Format::Csv) {
            std::cout << n;
            for (const MultiPoly& c : coeffs) std::cout << ',' << csv_cell(c);
            std::cout << "\n";
        } else {
            json cells = json::array();
            for (const MultiPoly& c : coeffs) cells.push_back(c.to_string());
            rows.push_back({{"n", n}, {"coefficients", cells}});
        }
    }
    if (format == Format::Json)
        std::cout << json{{"kind", a.kind}, {"bindings", bindings_json(id)}, {"rows", rows}}.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Appell-sequence toolkit: Bernoulli/Euler families, identity certificates, Monte-Carlo checks"};
    app.require_subcommand(1);

    FamilyArgs fam, tab, ev;
    McArgs mc;
    std::string verify_identity = "all";
    std::size_t verify_max_n = 12;
    std::string verify_format = "text";

    CLI::App* family_cmd = app.add_subcommand("family", "Print members of a polynomial family");
    family_cmd->add_option("kind", fam.kind, "bernoulli|euler|gen-bernoulli|gen-euler|mixed")->required();
    family_cmd->add_option("--n", fam.n, "single member degree");
    family_cmd->add_option("--max-n", fam.max_n, "print members 0..max-n");
    family_cmd->add_option("--m", fam.m_text, "rational binding for order m");
    family_cmd->add_option("--l", fam.l_text, "rational binding for order l");
    family_cmd->add_option("--format", fam.format, "text|json");

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a member at a rational point");
    eval_cmd->add_option("kind", ev.kind)->required();
    eval_cmd->add_option("--n", ev.n, "member degree");
    eval_cmd->add_option("--m", ev.m_text, "rational binding for order m");
    eval_cmd->add_option("--l", ev.l_text, "rational binding for order l");
    eval_cmd->add_option("--x", ev.x_text, "rational argument")->required();
    eval_cmd->add_option("--format", ev.format, "text|json");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check identities as exact polynomial identities");
    verify_cmd->add_option("--identity", verify_identity, "identity name or 'all'");
    verify_cmd->add_option("--max-n", verify_max_n, "check degrees 0..max-n");
    verify_cmd->add_option("--format", verify_format, "text|json");

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte-Carlo check of the expectation reduction");
    mc_cmd->add_option("kind", mc.kind, "bernoulli|euler")->required();
    mc_cmd->add_option("--n", mc.n, "member degree")->required();
    mc_cmd->add_option("--m", mc.m, "integer order")->required();
    mc_cmd->add_option("--l", mc.l, "number of sampled shifts (0..m)");
    mc_cmd->add_option("--x", mc.x_text, "rational evaluation point");
    mc_cmd->add_option("--samples", mc.samples, "sample count");
    mc_cmd->add_option("--seed", mc.seed, "PRNG seed");
    mc_cmd->add_option("--format", mc.format, "json|text");

    CLI::App* table_cmd = app.add_subcommand("table", "Coefficient table, one row per degree");
    table_cmd->add_option("kind", tab.kind)->required();
    table_cmd->add_option("--max-n", tab.max_n, "rows 0..max-n");
    table_cmd->add_option("--m", tab.m_text, "rational binding for order m");
    table_cmd->add_option("--l", tab.l_text, "rational binding for order l");
    table_cmd->add_option("--format", tab.format, "csv|json")->default_val("csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*family_cmd) return run_family(fam);
        if (*eval_cmd) return run_eval(ev);
        if (*verify_cmd) return run_verify(verify_identity, verify_max_n, verify_format);
        if (*mc_cmd) return run_mc(mc);
        if (*table_cmd) return run_table(tab);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
