#pragma once

// The `wallx` command line: argument parsing, dispatch and rendering.
// Exit status: 0 success, 1 failed suite or computation error, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forms.hpp"
#include "json.hpp"

namespace wallx::cli {

inline constexpr const char *kVersion = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Table, Json };

struct Common {
    std::optional<Index> trunc;
    std::string format = "table";
    bool json = false;

    Format output() const { return json || format == "json" ? Format::Json : Format::Table; }
};

// --trunc wins over WALLX_TRUNC; neither means auto-sized.
inline std::optional<Index> resolve_trunc(const Common &c)
{
    if (c.trunc) {
        return c.trunc;
    }
    const char *env = std::getenv("WALLX_TRUNC");
    if (env == nullptr || *env == '\0') {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        long long v = std::stoll(env, &used);
        if (used != std::string(env).size() || v < 0) {
            throw std::invalid_argument("");
        }
        return static_cast<Index>(v);
    } catch (const std::exception &) {
        throw UsageError(std::string("WALLX_TRUNC must be a nonnegative integer, got '") + env + "'");
    }
}

inline Rational parse_rational(const std::string &flag, const std::string &text)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception &) {
        throw UsageError(flag + " expects a rational num/den, got '" + text + "'");
    }
}

inline void header(std::ostream &out) { out << "# wallx " << kVersion << "\n"; }

inline void emit_json(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

inline std::string lattice_index_text(Index T) { return std::to_string(T) + "/48"; }

struct DeltaArgs {
    long xi_sq = 0;
    int sigma = 0;
    std::string pair = "1/1", quad = "0/1";
    int degree = 0;
};

inline int cmd_delta(const DeltaArgs &a, const Common &c, std::ostream &out)
{
    if (a.xi_sq >= 0) {
        throw UsageError("--xi-sq must be negative");
    }
    if (a.degree < 0) {
        throw UsageError("--degree must be nonnegative");
    }
    Rational pair = parse_rational("--pair", a.pair), quad = parse_rational("--quad", a.quad);
    DeltaTable t = delta_eval(a.xi_sq, a.sigma, Cyc8(pair), Cyc8(quad), a.degree, resolve_trunc(c));
    if (c.output() == Format::Json) {
        emit_json(out, json_of(t));
        return 0;
    }
    header(out);
    out << "# delta for xi^2 = " << a.xi_sq << ", sigma = " << a.sigma << ", xi/2 . alpha = " << pair
        << ", alpha^2 = " << quad << ", degree cap " << a.degree << ", truncation "
        << lattice_index_text(t.trunc) << "\n";
    out << "# values are delta(alpha^a p^r); entries off the wall type are 0\n";
    out << "a\tr\tvalue\n";
    for (const auto &[ar, v] : t.entries) {
        out << ar.first << "\t" << ar.second << "\t" << v << "\n";
    }
    return 0;
}

struct P2Args {
    std::string c1 = "H";
    int max_degree = 0;
    std::string pipeline = "closed";
};

inline int cmd_p2(const P2Args &a, const Common &c, std::ostream &out)
{
    if (a.max_degree < 0) {
        throw UsageError("--max-degree must be nonnegative");
    }
    C1 c1 = a.c1 == "H" ? C1::H : C1::Zero;
    auto T = resolve_trunc(c);
    InvariantTable t = a.pipeline == "closed" ? phi_p2(c1, a.max_degree, T) : phi_via_wallsum(c1, a.max_degree, T);
    if (c.output() == Format::Json) {
        emit_json(out, json_of(t));
        return 0;
    }
    header(out);
    out << "# sign convention: orientation fixed by a positive leading term of the wall-crossing\n"
        << "# formula. Published tables may differ from these values by signs and powers of 2.\n";
    out << "# Phi for c1 = " << c1_name(c1) << " on (H^(N-2r) p^r), degrees <= " << a.max_degree << ", "
        << a.pipeline << " pipeline, truncation " << lattice_index_text(t.trunc) << "\n";
    out << "N\tr\tvalue\n";
    for (const auto &[Nr, v] : t.entries) {
        out << Nr.first << "\t" << Nr.second << "\t" << v << "\n";
    }
    return 0;
}

struct WallsArgs {
    std::string geometry, parity;
    long degree = 0;
};

inline int cmd_walls(const WallsArgs &a, const Common &c, std::ostream &out)
{
    if (a.degree < 0) {
        throw UsageError("--degree must be nonnegative");
    }
    std::vector<WallClass> walls;
    std::string basis;
    if (a.geometry == "p1xp1") {
        if (a.parity != "f+g") {
            throw UsageError("geometry p1xp1 takes --parity f+g");
        }
        walls = walls_P1xP1(a.degree);
        basis = "F, G";
    } else {
        if (a.parity != "h" && a.parity != "e") {
            throw UsageError("geometry blowup-p2 takes --parity h or e");
        }
        walls = a.parity == "h" ? walls_blowupP2_h(a.degree) : walls_blowupP2_e(a.degree);
        basis = "H, E";
    }
    if (c.output() == Format::Json) {
        emit_json(out, {{"geometry", a.geometry}, {"parity", a.parity}, {"degree", a.degree}, {"walls", json_of(walls)}});
        return 0;
    }
    header(out);
    out << "# walls of type (" << a.degree << ") on " << a.geometry << ", parity " << a.parity << ", basis (" << basis
        << ")\n";
    out << "coords\txi^2\n";
    for (const auto &w : walls) {
        out << "(" << w.coords[0] << ", " << w.coords[1] << ")\t" << w.xi_sq << "\n";
    }
    out << "# " << walls.size() << " classes\n";
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    int kmax = 3;
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"identities", "diffeq", "recursions", "blowup", "residues",
                                                "qin",        "walls",  "p2",         "all"};
    return names;
}

inline Report run_suite(const std::string &name, const VerifyArgs &a, std::optional<Index> T)
{
    if (name == "identities") {
        return identity_suite(T.value_or(20 * kUnit));
    }
    if (name == "diffeq") {
        return diffeq_suite();
    }
    if (name == "recursions") {
        return recursion_suite();
    }
    if (name == "blowup") {
        return blowup_sweep();
    }
    if (name == "residues") {
        return residue_suite(a.kmax);
    }
    if (name == "qin") {
        return qin_vanishing(a.kmax, T);
    }
    if (name == "walls") {
        return wall_enumeration_suite(25);
    }
    return p2_dual_suite(20, T);
}

inline int cmd_verify(const VerifyArgs &a, const Common &c, std::ostream &out)
{
    if (a.kmax < 1) {
        throw UsageError("--kmax must be at least 1");
    }
    auto T = resolve_trunc(c);
    std::vector<std::string> names;
    if (a.suite == "all") {
        names.assign(suite_names().begin(), suite_names().end() - 1);
    } else {
        names.push_back(a.suite);
    }
    std::vector<Report> reports;
    bool ok = true;
    for (const auto &n : names) {
        Report r;
        try {
            r = run_suite(n, a, T);
        } catch (const std::exception &e) {
            r = Report{n, {CheckResult{"suite ran to completion", false, 0, {}, e.what()}}};
        }
        ok = ok && r.passed();
        reports.push_back(std::move(r));
    }
    if (c.output() == Format::Json) {
        Json arr = Json::array();
        for (const auto &r : reports) {
            arr.push_back(json_of(r));
        }
        emit_json(out, {{"passed", ok}, {"reports", arr}});
    } else {
        header(out);
        for (const auto &r : reports) {
            out << r.text();
        }
        out << (ok ? "all suites passed" : "some suites FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

// Parses argv-style arguments (without the program name) and runs.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series, wall-crossing terms and Donaldson invariants with b+ = 1", "wallx"};
    app.set_version_flag("--version", std::string("wallx ") + kVersion);
    app.require_subcommand(1);

    Common common;
    auto add_common = [&common](CLI::App *sub) {
        sub->add_option("--trunc", common.trunc, "Truncation as a lattice index in units of 1/48 (overrides WALLX_TRUNC)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_flag("--json", common.json, "Same as --format json");
    };

    DeltaArgs da;
    auto *delta = app.add_subcommand("delta", "Wall-crossing term delta(alpha^a p^r) for one cycle");
    delta->add_option("--xi-sq", da.xi_sq, "xi^2 (negative)")->required();
    delta->add_option("--sigma", da.sigma, "Signature of the surface");
    delta->add_option("--pair", da.pair, "xi/2 . alpha as num/den");
    delta->add_option("--quad", da.quad, "alpha^2 as num/den");
    delta->add_option("--degree", da.degree, "Degree cap a + 2r")->required();
    add_common(delta);

    P2Args pa;
    auto *p2 = app.add_subcommand("p2", "Donaldson invariants of the projective plane");
    p2->add_option("--c1", pa.c1, "First Chern class")->required()->check(CLI::IsMember({"H", "0"}));
    p2->add_option("--max-degree", pa.max_degree, "Largest degree N")->required();
    p2->add_option("--pipeline", pa.pipeline, "closed double sum or wall-by-wall sum")
        ->check(CLI::IsMember({"closed", "wallsum"}));
    add_common(p2);

    WallsArgs wa;
    auto *walls = app.add_subcommand("walls", "List walls of type (N)");
    walls->add_option("--geometry", wa.geometry, "Surface")->required()->check(CLI::IsMember({"p1xp1", "blowup-p2"}));
    walls->add_option("--parity", wa.parity, "Class of xi mod 2")->required()->check(CLI::IsMember({"h", "e", "f+g"}));
    walls->add_option("--degree", wa.degree, "Wall type N")->required();
    add_common(walls);

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", va.suite, "Suite to run")->check(CLI::IsMember(suite_names()));
    verify->add_option("--kmax", va.kmax, "Largest k for the residue and qin suites");
    add_common(verify);

    std::vector<std::string> storage{"wallx"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << "wallx " << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "wallx: " << e.what() << "\n" << "run 'wallx --help' for usage\n";
        return 2;
    }

    try {
        if (delta->parsed()) {
            return cmd_delta(da, common, out);
        }
        if (p2->parsed()) {
            return cmd_p2(pa, common, out);
        }
        if (walls->parsed()) {
            return cmd_walls(wa, common, out);
        }
        return cmd_verify(va, common, out);
    } catch (const UsageError &e) {
        err << "wallx: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "wallx: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "wallx: error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace wallx::cli
