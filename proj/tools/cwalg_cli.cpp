// cwalg: command-line front end for the W-algebra engine.
//
// exit codes: 0 all requested checks pass, 1 a check failed, 2 bad config

#include "cwalg/brst.hpp"
#include "cwalg/miura.hpp"
#include "cwalg/walgebra.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace cwalg;
using nlohmann::json;

namespace {

struct Config {
    std::string pyramid;
    std::string level = "k";
    std::string backend = "full";
    std::string out;
    int cap = 3;
    std::uint64_t seed = 20240601;
    bool quiet = false;
};

struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Pyramid parse_pyramid(const Config& cfg)
{
    try {
        return Pyramid::parse(cfg.pyramid);
    } catch (const ShapeError& e) {
        throw BadConfig(std::string("bad --pyramid: ") + e.what());
    }
}

Scalar parse_level(const std::string& text)
{
    if (text == "k")
        return Scalar::k();
    try {
        Rational q(text);
        q.canonicalize();
        return Scalar(q);
    } catch (const std::invalid_argument&) {
        throw BadConfig("bad --level '" + text + "': expected k or a rational like -3 or 1/2");
    }
}

void emit(const Config& cfg, const json& report)
{
    if (cfg.out.empty())
        return;
    std::ofstream os(cfg.out);
    if (!os)
        throw BadConfig("cannot write " + cfg.out);
    os << report.dump(2) << "\n";
}

int finish(const Config& cfg, const json& report)
{
    emit(cfg, report);
    const bool pass = !report.contains("status") || report["status"] == "pass";
    return pass ? 0 : 1;
}

void say(const Config& cfg, const std::string& line)
{
    if (!cfg.quiet)
        std::cout << line << "\n";
}

int cmd_basis(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    json rows = json::array();
    for (const GenIndex& g : p.basis_E()) {
        json units = json::array();
        std::string text;
        for (auto [a, b] : p.matrix_units(g)) {
            units.push_back({a, b});
            text += " e" + std::to_string(a) + "," + std::to_string(b);
        }
        rows.push_back({{"i", g.i}, {"j", g.j}, {"r", g.r}, {"units", units}});
        say(cfg, to_string(g) + " =" + text);
    }
    return finish(cfg, {{"schema", 1}, {"pyramid", p.to_json()}, {"basis", rows}, {"dimension", rows.size()}});
}

int cmd_form(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    json rows = json::array();
    const auto basis = p.basis_E();
    for (const auto& x : basis)
        for (const auto& y : basis) {
            const Rational v = form(p, x, y);
            if (v == 0)
                continue;
            rows.push_back({{"x", to_string(x)}, {"y", to_string(y)}, {"value", v.get_str()}});
            say(cfg, "<" + to_string(x) + ", " + to_string(y) + "> = " + v.get_str());
        }
    json alphas = json::array();
    for (int i = 1; i <= p.n(); ++i) {
        const Scalar a = alpha(p, i, parse_level(cfg.level));
        alphas.push_back(a.to_string());
        say(cfg, "alpha_" + std::to_string(i) + " = " + a.to_string());
    }
    return finish(cfg, {{"schema", 1}, {"pyramid", p.to_json()}, {"form", rows}, {"alpha", alphas}});
}

int cmd_structure(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    const ModeAlgebra alg(p, Realization::Full);
    json rows = json::array();
    for (int a = 0; a < alg.size(); ++a)
        for (int b = 0; b < alg.size(); ++b) {
            const GenIndex& x = alg.gen(a);
            const GenIndex& y = alg.gen(b);
            if (x.kind != GenKind::E || y.kind != GenKind::E)
                continue;
            const auto& rule = alg.rule(a, b);
            if (rule.lie.empty())
                continue;
            json terms = json::array();
            std::string text;
            for (const auto& t : rule.lie) {
                terms.push_back({{"coeff", t.coeff.get_str()}, {"gen", to_string(alg.gen(t.gen))}});
                text += (t.coeff > 0 ? " + " : " - ") + to_string(alg.gen(t.gen));
            }
            rows.push_back({{"x", to_string(x)}, {"y", to_string(y)}, {"bracket", terms}});
            say(cfg, "[" + to_string(x) + ", " + to_string(y) + "] =" + text);
        }
    return finish(cfg, {{"schema", 1}, {"pyramid", p.to_json()}, {"brackets", rows}});
}

Backend parse_backend(const std::string& name)
{
    if (name == "full")
        return Backend::Full;
    if (name == "reduced")
        return Backend::Reduced;
    throw BadConfig("bad --backend '" + name + "': expected full or reduced");
}

int cmd_generators(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    Complex cx(p, parse_level(cfg.level));
    const Backend backend = parse_backend(cfg.backend);
    StateSpace& space = backend == Backend::Full ? cx.full() : cx.reduced();
    const Coefficients gens = generators(cx, backend);
    json list = json::array();
    bool certified = true;
    for (const auto& [key, w] : gens) {
        list.push_back({{"l", key.first}, {"r", key.second}, {"state", space.to_json(w)}});
        say(cfg, "w_" + std::to_string(key.first) + "^(" + std::to_string(key.second) + ") = " + space.to_text(w));
        const State closed = backend == Backend::Full ? cx.d(w) : cx.d(dress(cx, w));
        certified = certified && closed.is_zero();
    }
    say(cfg, std::string("certified: ") + (certified ? "yes" : "no"));
    json report = {{"schema", 1},
                   {"pyramid", p.to_json()},
                   {"level", cx.level().to_string()},
                   {"backend", backend_name(backend)},
                   {"generators", list},
                   {"certified", certified},
                   {"status", certified ? "pass" : "fail"}};
    return finish(cfg, report);
}

int cmd_miura(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    Complex cx(p, parse_level(cfg.level));
    json list = json::array();
    for (const auto& [key, v] : miura_expand(cx)) {
        list.push_back({{"l", key.first}, {"r", key.second}, {"state", cx.heisenberg().to_json(v)}});
        say(cfg, "v_" + std::to_string(key.first) + "^(" + std::to_string(key.second) + ") = " +
                     cx.heisenberg().to_text(v));
    }
    return finish(cfg, {{"schema", 1}, {"pyramid", p.to_json()}, {"level", cx.level().to_string()}, {"expansion", list}});
}

int cmd_hilbert(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    if (cfg.cap < 1)
        throw BadConfig("--cap must be at least 1");
    const auto series = hilbert_series(p, cfg.cap);
    const auto counted = count_w_monomials(p, cfg.cap);
    std::string line;
    for (long c : series)
        line += (line.empty() ? "" : " ") + std::to_string(c);
    say(cfg, line);
    const bool agree = series == counted;
    if (!agree)
        std::cerr << "monomial count disagrees with the product formula\n";
    return finish(cfg, {{"schema", 1},
                        {"statement", "Hilbert-Poincare series of the W-algebra against a direct monomial count"},
                        {"pyramid", p.to_json()},
                        {"cap", cfg.cap},
                        {"series", series},
                        {"monomial_count", counted},
                        {"status", agree ? "pass" : "fail"}});
}

int cmd_rank(const Config& cfg)
{
    const Pyramid p = parse_pyramid(cfg);
    const json report = injectivity_rank(p, cfg.cap, cfg.seed);
    say(cfg, "rank " + report.value("rank", json(0)).dump() + " of " + report["expected"].dump() + " expected (" +
                 report["status"].get<std::string>() + ")");
    return finish(cfg, report);
}

int summarize(const Config& cfg, const json& report, const std::string& what)
{
    say(cfg, what + ": " + report["status"].get<std::string>());
    if (report.contains("counterexample"))
        say(cfg, "  " + report["counterexample"].dump());
    return finish(cfg, report);
}

int cmd_verify(const Config& cfg, const std::string& which)
{
    const Pyramid p = parse_pyramid(cfg);
    if (cfg.cap < 0)
        throw BadConfig("--cap must be non-negative");
    SweepOptions opt;
    opt.degree_cap = cfg.cap;

    if (which == "d2") {
        Complex cx(p, parse_level(cfg.level));
        return summarize(cfg, verify_lemma(cx, Lemma::Nilpotency, opt), "nilpotency of d");
    }
    if (which == "lemmas") {
        Complex cx(p, parse_level(cfg.level));
        json all = {{"schema", 1}, {"pyramid", p.to_json()}, {"cap", cfg.cap}};
        json reports = json::array();
        bool ok = true;
        for (Lemma l : {Lemma::Nilpotency, Lemma::LowerBrackets, Lemma::UpperBrackets, Lemma::DifferentialAction,
                        Lemma::ChiAction}) {
            json r = verify_lemma(cx, l, opt);
            say(cfg, std::string(lemma_name(l)) + ": " + r["status"].get<std::string>() + " (" +
                         r["checked"].dump() + " checks)");
            if (r.contains("counterexample"))
                say(cfg, "  " + r["counterexample"].dump());
            ok = ok && r["status"] == "pass";
            reports.push_back(std::move(r));
        }
        all["reports"] = reports;
        all["status"] = ok ? "pass" : "fail";
        return finish(cfg, all);
    }
    if (which == "dw") {
        Complex cx(p, parse_level(cfg.level));
        const json r = certify_generators(cx);
        say(cfg, std::to_string(r["count"].get<int>()) + " generators, N = " + std::to_string(p.N()));
        return summarize(cfg, r, "closure");
    }
    if (which == "miura") {
        Complex cx(p, parse_level(cfg.level));
        json r = verify_miura(cx);
        const json products = verify_miura_products(cx);
        r["products"] = products;
        if (products["status"] != "pass")
            r["status"] = "fail";
        return summarize(cfg, r, "miura");
    }
    if (which == "critical") {
        const json r = critical_commutativity(p);
        say(cfg, std::string("generic nonzero product: ") + (r["generic_nonzero"].get<bool>() ? "yes" : "no"));
        return summarize(cfg, r, "critical commutativity");
    }
    throw BadConfig("unknown check '" + which + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact W-algebras of centralizers in gl_N"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&cfg](CLI::App* sub, bool with_cap) {
        sub->add_option("--pyramid,-p", cfg.pyramid, "row lengths, ascending, e.g. 2,3,4")->required();
        sub->add_option("--out,-o", cfg.out, "write the JSON report here");
        sub->add_flag("--quiet,-q", cfg.quiet, "no human summary");
        if (with_cap)
            sub->add_option("--cap", cfg.cap, "degree cap");
    };

    auto* basis = app.add_subcommand("basis", "basis E_ij^(r) of the centralizer");
    common(basis, false);
    auto* form_cmd = app.add_subcommand("form", "invariant form and the constants alpha_i");
    common(form_cmd, false);
    form_cmd->add_option("--level", cfg.level, "k or a rational");
    auto* structure = app.add_subcommand("structure-consts", "brackets of basis elements");
    common(structure, false);
    auto* gens = app.add_subcommand("generators", "column-determinant generators w_l^(r)|0>");
    common(gens, false);
    gens->add_option("--level", cfg.level, "k or a rational");
    gens->add_option("--backend", cfg.backend, "full or reduced");
    auto* miura = app.add_subcommand("miura", "Miura expansion v_l^(r)|0>");
    common(miura, false);
    miura->add_option("--level", cfg.level, "k or a rational");
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert-Poincare series coefficients");
    common(hilbert, true);
    auto* rank = app.add_subcommand("rank", "injectivity of the Miura map up to a degree");
    common(rank, true);
    rank->add_option("--seed", cfg.seed, "random level seed");

    auto* verify = app.add_subcommand("verify", "machine checks");
    verify->require_subcommand(1);
    std::string which;
    const std::pair<const char*, const char*> checks[] = {
        {"d2", "nilpotency of d_st, chi and d on basis states"},
        {"dw", "closure of the generators under d"},
        {"lemmas", "identity sweeps for the dressed fields"},
        {"miura", "Miura projection of the generators and of their products"},
        {"critical", "commutativity at k = -N"}};
    for (const auto& [name, what] : checks) {
        auto* sub = verify->add_subcommand(name, what);
        common(sub, true);
        sub->add_option("--level", cfg.level, "k or a rational");
        sub->callback([&which, name] { which = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (basis->parsed())
            return cmd_basis(cfg);
        if (form_cmd->parsed())
            return cmd_form(cfg);
        if (structure->parsed())
            return cmd_structure(cfg);
        if (gens->parsed())
            return cmd_generators(cfg);
        if (miura->parsed())
            return cmd_miura(cfg);
        if (hilbert->parsed())
            return cmd_hilbert(cfg);
        if (rank->parsed())
            return cmd_rank(cfg);
        if (verify->parsed())
            return cmd_verify(cfg, which);
    } catch (const BadConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
