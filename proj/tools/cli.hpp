#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gaussforge/gaussforge.hpp"

namespace gaussforge::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2, kInternalError = 3 };

inline constexpr const char* kLimitEnv = "GAUSSFORGE_MAX_CHORDS";

struct Options {
    std::string code;
    std::string var = "t";
    bool json = false;
    bool closed = false;
    std::string map;
    std::optional<int> max_chords;
    bool kh = false;
    int moves = 50;
    std::uint64_t seed = 1;
    int samples = 10;
    int chords = 4;
    std::string target_pr;
    std::string target_ip;
    bool inject_r2_fault = false;
};

namespace detail {

inline Variable variable_of(const std::string& v) {
    if (v == "A") return Variable::A;
    if (v == "q") return Variable::q;
    return Variable::t;
}

/// Flag, then environment, then the per-command default.
inline int chord_limit(const Options& o, int fallback) {
    if (o.max_chords) return *o.max_chords;
    if (const char* env = std::getenv(kLimitEnv); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 0 || v > kMaxStateChords) {
            throw Error(Errc::MalformedToken, std::string(kLimitEnv) + "='" + env + "' is not a chord count");
        }
        return static_cast<int>(v);
    }
    return fallback;
}

inline GaussDiagram read_diagram(const Options& o) {
    GaussDiagram d = parse_gauss_code(o.code);
    if (o.closed && !d.closed()) d = close(d);
    return d;
}

/// Projections to report: all four for based input, p_r and p_ra for closed
/// input (the flat projection needs a base point), optionally one only.
inline std::vector<std::pair<std::string, PseudoDiagram>> selected_projections(const GaussDiagram& d,
                                                                               const std::string& only) {
    std::vector<std::pair<std::string, PseudoDiagram>> all;
    if (d.closed()) {
        all.emplace_back("pr", map_p_r(d));
        all.emplace_back("pra", map_p_ra(d));
    } else {
        const auto f = four_projections(d);
        all = {{"pr", f.pr}, {"pra", f.pra}, {"ip", f.ip}, {"iap", f.iap}};
    }
    if (only.empty()) return all;
    for (auto& entry : all) {
        if (entry.first == only) return {entry};
    }
    throw Error(Errc::RequiresBasePoint, "map '" + only + "' needs a based diagram");
}

inline nlohmann::json pairs_json(const LaurentPoly& p, Variable v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : exponent_pairs(p, v)) arr.push_back({e, c});
    return arr;
}

struct KhReport {
    GradedDims dims;
    LaurentPoly euler;
    bool euler_ok = false;
};

inline KhReport khovanov_report(const PseudoDiagram& s, int limit) {
    KhReport r;
    r.dims = homology_dims(s, limit);
    r.euler = euler_characteristic(r.dims);
    r.euler_ok = r.euler == unnormalized_jones_q(jones(s, limit));
    return r;
}

inline nlohmann::json kh_json(const KhReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [g, dim] : r.dims.entries()) rows.push_back({{"i", g.i}, {"j", g.j}, {"dim", dim}});
    return {{"homology", rows}, {"euler", render_plain(r.euler, 'q')}, {"euler_ok", r.euler_ok}};
}

inline int cmd_jones(const Options& o, std::ostream& out) {
    const GaussDiagram d = read_diagram(o);
    const Variable v = variable_of(o.var);
    const int limit = chord_limit(o, kDefaultBracketLimit);
    const int kh_limit = chord_limit(o, kDefaultKhovanovLimit);
    nlohmann::json doc{{"code", serialize(d)}, {"var", o.var}, {"jones", nlohmann::json::object()},
                       {"khovanov", nlohmann::json::object()}};
    bool euler_ok = true;
    for (const auto& [name, s] : selected_projections(d, o.map)) {
        const LaurentPoly p = jones(s, limit);
        doc["jones"][name] = pairs_json(p, v);
        if (!o.json) out << name << ": " << render(p, v) << '\n';
        if (o.kh) {
            const KhReport r = khovanov_report(s, kh_limit);
            euler_ok = euler_ok && r.euler_ok;
            doc["khovanov"][name] = kh_json(r);
            if (!o.json) out << render_table(r.dims);
        }
    }
    if (o.json) out << doc.dump() << '\n';
    if (o.kh && !o.json) out << "euler: " << (euler_ok ? "OK" : "MISMATCH") << '\n';
    return euler_ok ? kOk : kInternalError;
}

inline int cmd_khovanov(const Options& o, std::ostream& out) {
    const GaussDiagram d = read_diagram(o);
    const int limit = chord_limit(o, kDefaultKhovanovLimit);
    nlohmann::json doc{{"code", serialize(d)}, {"jones", nlohmann::json::object()},
                       {"khovanov", nlohmann::json::object()}};
    bool euler_ok = true;
    for (const auto& [name, s] : selected_projections(d, o.map)) {
        const KhReport r = khovanov_report(s, limit);
        euler_ok = euler_ok && r.euler_ok;
        doc["khovanov"][name] = kh_json(r);
        if (!o.json) out << name << ":\n" << render_table(r.dims);
    }
    if (o.json) {
        out << doc.dump() << '\n';
    } else {
        out << "euler: " << (euler_ok ? "OK" : "MISMATCH") << '\n';
    }
    return euler_ok ? kOk : kInternalError;
}

struct Invariants {
    FourWay<LaurentPoly> jones;
    std::optional<FourWay<GradedDims>> kh;
    friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline int cmd_verify(const Options& o, std::ostream& out) {
    const GaussDiagram d = read_diagram(o);
    if (d.closed()) throw Error(Errc::RequiresBasePoint, "moves are applied to based diagrams");
    const int limit = chord_limit(o, o.kh ? kDefaultKhovanovLimit : kDefaultBracketLimit);
    if (static_cast<int>(d.n_chords()) > limit) {
        throw Error(Errc::TooManyChords, std::to_string(d.n_chords()) + " chords exceed the limit of " +
                                             std::to_string(limit));
    }
    auto invariants = [&](const GaussDiagram& x) {
        Invariants inv{four_jones(x, limit), std::nullopt};
        if (o.kh) inv.kh = kh_four(x, limit);
        return inv;
    };
    const Invariants base = invariants(d);
    WalkOptions wopts;
    wopts.max_chords = std::min(static_cast<int>(d.n_chords()) + 4, limit);
    wopts.corrupt_r2_sign = o.inject_r2_fault;

    for (int k = 0; k < o.samples; ++k) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
        const WalkResult walk = random_walk_logged(d, o.moves, seed, wopts);
        if (invariants(walk.diagram) == base) continue;
        // Replay to report the shortest failing prefix.
        std::size_t upto = walk.moves.size();
        for (std::size_t len = 1; len <= walk.moves.size(); ++len) {
            const WalkResult prefix = random_walk_logged(d, static_cast<int>(len), seed, wopts);
            if (!(invariants(prefix.diagram) == base)) {
                upto = len;
                break;
            }
        }
        out << "FAIL sample " << k << " seed " << seed << '\n';
        out << "start: " << serialize(d) << '\n';
        for (std::size_t m = 0; m < upto; ++m) out << "  " << to_string(walk.moves[m]) << '\n';
        out << "end: " << serialize(random_walk(d, static_cast<int>(upto), seed, wopts)) << '\n';
        return kViolation;
    }
    out << "PASS " << o.samples << " samples x " << o.moves << " moves" << (o.kh ? " (jones, khovanov)" : " (jones)")
        << '\n';
    return kOk;
}

inline int cmd_search(const Options& o, std::ostream& out) {
    if (o.target_pr.empty()) throw Error(Errc::MalformedPolynomial, "--target-pr is required");
    const Variable v = variable_of(o.var);
    const LaurentPoly pr = parse_polynomial(o.target_pr, v);
    std::optional<LaurentPoly> ip;
    if (!o.target_ip.empty()) ip = parse_polynomial(o.target_ip, v);
    const auto hits = find_by_invariants(o.chords, [&](const FourWay<LaurentPoly>& f) {
        return f.pr == pr && (!ip || f.ip == *ip);
    });
    for (const auto& d : hits) out << serialize(d) << '\n';
    return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jones and Khovanov invariants of long virtual knots given as Gauss codes"};
    app.name("gaussforge");
    app.require_subcommand(1);
    Options o;

    auto add_code = [&](CLI::App* sub) {
        sub->add_option("code", o.code, "Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");
        sub->add_flag("--closed", o.closed, "Treat the code as a closed diagram");
        sub->add_option("--max-chords", o.max_chords, "Chord limit (overrides GAUSSFORGE_MAX_CHORDS)")
            ->check(CLI::Range(0, kMaxStateChords));
    };
    auto add_map = [&](CLI::App* sub) {
        sub->add_option("--map", o.map, "Report one projection only")
            ->check(CLI::IsMember({"pr", "pra", "ip", "iap"}));
    };
    auto add_var = [&](CLI::App* sub) {
        sub->add_option("--var", o.var, "Variable for polynomials")->check(CLI::IsMember({"A", "t", "q"}));
    };

    CLI::App* jones_cmd = app.add_subcommand("jones", "Jones polynomials of the four projections");
    add_code(jones_cmd);
    add_map(jones_cmd);
    add_var(jones_cmd);
    jones_cmd->add_flag("--json", o.json, "Emit JSON");
    jones_cmd->add_flag("--kh", o.kh, "Also compute Khovanov homology");

    CLI::App* kh_cmd = app.add_subcommand("khovanov", "Khovanov homology over Z/2 of the four projections");
    add_code(kh_cmd);
    add_map(kh_cmd);
    kh_cmd->add_flag("--json", o.json, "Emit JSON");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check invariance under random Reidemeister moves");
    add_code(verify_cmd);
    verify_cmd->add_option("--moves", o.moves, "Moves per walk")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", o.seed, "Seed of the first walk");
    verify_cmd->add_option("--samples", o.samples, "Number of walks")->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--kh", o.kh, "Also compare Khovanov tables");
    verify_cmd->add_flag("--inject-r2-fault", o.inject_r2_fault)->group("");

    CLI::App* search_cmd = app.add_subcommand("search", "Find diagrams with prescribed Jones polynomials");
    search_cmd->add_option("--chords", o.chords, "Largest chord count searched")->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--target-pr", o.target_pr, "Required V of p_r")->required();
    search_cmd->add_option("--target-ip", o.target_ip, "Required V of i o p");
    add_var(search_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (jones_cmd->parsed()) return detail::cmd_jones(o, out);
        if (kh_cmd->parsed()) return detail::cmd_khovanov(o, out);
        if (verify_cmd->parsed()) return detail::cmd_verify(o, out);
        if (search_cmd->parsed()) return detail::cmd_search(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInputError;
}

}  // namespace gaussforge::cli
