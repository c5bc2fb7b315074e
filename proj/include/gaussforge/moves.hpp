#pragma once

// Reidemeister moves on based Gauss diagrams.
//
// Positions are a linear word 0..2n-1 from the base point, so no move can
// wrap across it. Insertion sites are gaps 0..2n (gap g sits just before
// position g; gaps 0 and 2n are the two outer arcs).
//
// R1: an isolated chord with adjacent endpoints, any sign, either arrow.
// R2: two chords joining two adjacent endpoint pairs ("strands"), opposite
//     signs, both over-passages on the same strand. The chords are nested when
//     the strands are traversed in opposite directions and parallel otherwise.
// R3: three chords whose six endpoints form three adjacent pairs: the top
//     strand (two over-passages), the middle strand (one of each) and the
//     bottom strand (two under-passages). The move reverses the order inside
//     every pair. Writing a = top/middle, b = top/bottom, c = middle/bottom
//     and s_T, s_M, s_B = +1 when a precedes b on the top strand, a precedes c
//     on the middle strand, b precedes c on the bottom strand, a triangle
//     exists exactly when, for w = sign(a) sign(b) sign(c),
//         sign(a) = w s_T s_M,   sign(b) = w s_T s_B,   sign(c) = w s_M s_B.
//     Reversing all three orders preserves the condition, so the move is its
//     own inverse at the same site.

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gaussforge/error.hpp"
#include "gaussforge/gauss.hpp"

namespace gaussforge {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

inline constexpr std::array<MoveKind, 5> kAllMoveKinds = {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                                                          MoveKind::R2Delete, MoveKind::R3};

struct MoveSpec {
    MoveKind kind = MoveKind::R1Insert;
    int gap = 0;                // inserts: first gap
    int gap2 = 0;               // R2 insert: second gap, gap <= gap2
    std::vector<int> chords{};  // deletes and R3: chord ids (R3 ordered a, b, c)
    Sign sign = Sign::Positive; // R1: chord sign; R2: sign of the chord at the first new position
    bool over_first = true;     // R1: over-passage first; R2: the first strand is the over-strand
    bool nested = true;         // R2 insert: nested or parallel chords
    std::array<Sign, 3> signs{};  // R3: signs of a, b, c
    std::array<int, 3> orders{};  // R3: s_T, s_M, s_B before the move

    friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

inline std::string to_string(const MoveSpec& m) {
    auto ids = [&] {
        std::string s = "(";
        for (std::size_t k = 0; k < m.chords.size(); ++k) s += (k ? "," : "") + std::to_string(m.chords[k]);
        return s + ")";
    };
    switch (m.kind) {
        case MoveKind::R1Insert:
            return "R1+ gap=" + std::to_string(m.gap) + " sign=" + to_char(m.sign) +
                   " over=" + (m.over_first ? "first" : "second");
        case MoveKind::R1Delete:
            return "R1- chord=" + ids();
        case MoveKind::R2Insert:
            return "R2+ gaps=(" + std::to_string(m.gap) + "," + std::to_string(m.gap2) + ") " +
                   (m.nested ? "nested" : "parallel") + " sign=" + to_char(m.sign) +
                   " over=" + (m.over_first ? "first" : "second");
        case MoveKind::R2Delete:
            return "R2- chords=" + ids();
        case MoveKind::R3: {
            std::string s = "R3 chords=" + ids() + " signs=";
            for (Sign x : m.signs) s += to_char(x);
            return s;
        }
    }
    return {};
}

namespace detail {

inline void require_based(const GaussDiagram& d) {
    if (d.closed()) throw Error(Errc::RequiresBasePoint, "moves act on based diagrams");
}

inline const Chord& chord_by_id(const GaussDiagram& d, int id) {
    const Chord* c = d.find(id);
    if (!c) throw Error(Errc::InvalidSite, "no chord with id " + std::to_string(id));
    return *c;
}

inline Chord make_chord(int id, int p1, int p2, Sign sign, int over) {
    Chord c;
    c.id = id;
    c.end_first = std::min(p1, p2);
    c.end_second = std::max(p1, p2);
    c.sign = sign;
    c.over_end = over;
    return c;
}

// Shifts existing positions to open two-slot holes at the given gaps.
inline int shifted_position(int p, const std::vector<int>& gaps) {
    int shift = 0;
    for (int g : gaps) {
        if (p >= g) shift += 2;
    }
    return p + shift;
}

inline GaussDiagram remove_chords(const GaussDiagram& d, const std::vector<int>& ids) {
    std::vector<int> removed;
    for (int id : ids) {
        const Chord& c = chord_by_id(d, id);
        removed.push_back(c.end_first);
        removed.push_back(c.end_second);
    }
    std::sort(removed.begin(), removed.end());
    auto compact = [&](int p) {
        return p - static_cast<int>(std::lower_bound(removed.begin(), removed.end(), p) - removed.begin());
    };
    std::vector<Chord> out;
    for (const Chord& c : d.chords()) {
        if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) continue;
        out.push_back(make_chord(c.id, compact(c.end_first), compact(c.end_second), c.sign, compact(c.over_end)));
    }
    return GaussDiagram(std::move(out), d.closed());
}

inline bool is_r1_site(const Chord& c) { return c.end_second == c.end_first + 1; }

inline bool is_r2_site(const Chord& x, const Chord& y) {
    if (x.sign == y.sign) return false;
    std::array<int, 4> p{x.end_first, x.end_second, y.end_first, y.end_second};
    std::sort(p.begin(), p.end());
    if (p[1] != p[0] + 1 || p[3] != p[2] + 1) return false;
    auto strand = [&](int pos) { return pos <= p[1] ? 0 : 1; };
    if (strand(x.end_first) == strand(x.end_second)) return false;
    if (strand(y.end_first) == strand(y.end_second)) return false;
    return strand(x.over_end) == strand(y.over_end);
}

struct R3Match {
    std::array<int, 3> ids{};      // a, b, c
    std::array<Sign, 3> signs{};
    std::array<int, 3> orders{};   // s_T, s_M, s_B
};

inline std::optional<R3Match> match_r3(const Chord& x, const Chord& y, const Chord& z) {
    struct End {
        int pos;
        int chord;
        bool over;
    };
    const std::array<const Chord*, 3> cs{&x, &y, &z};
    std::array<End, 6> ends{};
    for (int k = 0; k < 3; ++k) {
        ends[2 * k] = {cs[k]->end_first, k, cs[k]->over_end == cs[k]->end_first};
        ends[2 * k + 1] = {cs[k]->end_second, k, cs[k]->over_end == cs[k]->end_second};
    }
    std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) { return a.pos < b.pos; });
    int top = -1, mid = -1, bot = -1;
    for (int pr = 0; pr < 3; ++pr) {
        const End& e0 = ends[2 * pr];
        const End& e1 = ends[2 * pr + 1];
        if (e1.pos != e0.pos + 1 || e0.chord == e1.chord) return std::nullopt;
        const int overs = int(e0.over) + int(e1.over);
        int& slot = overs == 2 ? top : (overs == 0 ? bot : mid);
        if (slot >= 0) return std::nullopt;
        slot = pr;
    }
    // The middle strand holds a's under-passage and c's over-passage.
    const End& m0 = ends[2 * mid];
    const End& m1 = ends[2 * mid + 1];
    const int a = m0.over ? m1.chord : m0.chord;
    const int c = m0.over ? m0.chord : m1.chord;
    const int b = 3 - a - c;
    auto first_in = [&](int strand, int chord) { return ends[2 * strand].chord == chord ? 1 : -1; };
    R3Match r;
    r.ids = {cs[a]->id, cs[b]->id, cs[c]->id};
    r.signs = {cs[a]->sign, cs[b]->sign, cs[c]->sign};
    r.orders = {first_in(top, a), first_in(mid, a), first_in(bot, b)};
    const int w = to_int(r.signs[0]) * to_int(r.signs[1]) * to_int(r.signs[2]);
    if (to_int(r.signs[0]) != w * r.orders[0] * r.orders[1]) return std::nullopt;
    if (to_int(r.signs[1]) != w * r.orders[0] * r.orders[2]) return std::nullopt;
    return r;
}

}  // namespace detail

/// Every applicable move of one kind, in a deterministic order.
inline std::vector<MoveSpec> enumerate_moves(const GaussDiagram& d, MoveKind kind) {
    detail::require_based(d);
    std::vector<MoveSpec> out;
    const int gaps = static_cast<int>(d.n_positions()) + 1;
    const auto& cs = d.chords();
    switch (kind) {
        case MoveKind::R1Insert:
            for (int g = 0; g < gaps; ++g) {
                for (Sign s : {Sign::Positive, Sign::Negative}) {
                    for (bool over_first : {true, false}) {
                        MoveSpec m;
                        m.kind = kind;
                        m.gap = g;
                        m.sign = s;
                        m.over_first = over_first;
                        out.push_back(m);
                    }
                }
            }
            break;
        case MoveKind::R1Delete:
            for (const Chord& c : cs) {
                if (detail::is_r1_site(c)) out.push_back({.kind = kind, .chords = {c.id}});
            }
            break;
        case MoveKind::R2Insert:
            for (int g1 = 0; g1 < gaps; ++g1) {
                for (int g2 = g1; g2 < gaps; ++g2) {
                    for (bool nested : {true, false}) {
                        for (bool over_first : {true, false}) {
                            for (Sign s : {Sign::Positive, Sign::Negative}) {
                                MoveSpec m;
                                m.kind = kind;
                                m.gap = g1;
                                m.gap2 = g2;
                                m.nested = nested;
                                m.over_first = over_first;
                                m.sign = s;
                                out.push_back(m);
                            }
                        }
                    }
                }
            }
            break;
        case MoveKind::R2Delete:
            for (std::size_t x = 0; x < cs.size(); ++x) {
                for (std::size_t y = x + 1; y < cs.size(); ++y) {
                    if (detail::is_r2_site(cs[x], cs[y])) out.push_back({.kind = kind, .chords = {cs[x].id, cs[y].id}});
                }
            }
            break;
        case MoveKind::R3:
            for (std::size_t x = 0; x < cs.size(); ++x) {
                for (std::size_t y = x + 1; y < cs.size(); ++y) {
                    for (std::size_t z = y + 1; z < cs.size(); ++z) {
                        if (auto r = detail::match_r3(cs[x], cs[y], cs[z])) {
                            MoveSpec m;
                            m.kind = kind;
                            m.chords = {r->ids[0], r->ids[1], r->ids[2]};
                            m.signs = r->signs;
                            m.orders = r->orders;
                            out.push_back(m);
                        }
                    }
                }
            }
            break;
    }
    return out;
}

inline GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& m) {
    detail::require_based(d);
    const int gaps = static_cast<int>(d.n_positions()) + 1;
    auto invalid = [&](const std::string& why) -> GaussDiagram {
        throw Error(Errc::InvalidSite, to_string(m) + ": " + why);
    };
    switch (m.kind) {
        case MoveKind::R1Insert: {
            if (m.gap < 0 || m.gap >= gaps) return invalid("gap out of range");
            std::vector<Chord> out;
            for (const Chord& c : d.chords()) {
                const std::vector<int> g{m.gap};
                out.push_back(detail::make_chord(c.id, detail::shifted_position(c.end_first, g),
                                                 detail::shifted_position(c.end_second, g), c.sign,
                                                 detail::shifted_position(c.over_end, g)));
            }
            out.push_back(detail::make_chord(d.max_id() + 1, m.gap, m.gap + 1, m.sign,
                                             m.over_first ? m.gap : m.gap + 1));
            return GaussDiagram(std::move(out), false);
        }
        case MoveKind::R1Delete: {
            if (m.chords.size() != 1) return invalid("expects one chord");
            if (!detail::is_r1_site(detail::chord_by_id(d, m.chords[0]))) return invalid("endpoints not adjacent");
            return detail::remove_chords(d, m.chords);
        }
        case MoveKind::R2Insert: {
            if (m.gap < 0 || m.gap2 < m.gap || m.gap2 >= gaps) return invalid("gaps out of range");
            const std::vector<int> g{m.gap, m.gap2};
            std::vector<Chord> out;
            for (const Chord& c : d.chords()) {
                out.push_back(detail::make_chord(c.id, detail::shifted_position(c.end_first, g),
                                                 detail::shifted_position(c.end_second, g), c.sign,
                                                 detail::shifted_position(c.over_end, g)));
            }
            // First strand occupies m.gap, m.gap+1; second strand m.gap2+2, m.gap2+3.
            const int s1 = m.gap;
            const int s2 = m.gap2 + 2;
            const int x_other = m.nested ? s2 + 1 : s2;
            const int y_other = m.nested ? s2 : s2 + 1;
            const int id = d.max_id();
            out.push_back(detail::make_chord(id + 1, s1, x_other, m.sign, m.over_first ? s1 : x_other));
            out.push_back(detail::make_chord(id + 2, s1 + 1, y_other, -m.sign, m.over_first ? s1 + 1 : y_other));
            return GaussDiagram(std::move(out), false);
        }
        case MoveKind::R2Delete: {
            if (m.chords.size() != 2) return invalid("expects two chords");
            if (!detail::is_r2_site(detail::chord_by_id(d, m.chords[0]), detail::chord_by_id(d, m.chords[1]))) {
                return invalid("not an R2 pair");
            }
            return detail::remove_chords(d, m.chords);
        }
        case MoveKind::R3: {
            if (m.chords.size() != 3) return invalid("expects three chords");
            const Chord& x = detail::chord_by_id(d, m.chords[0]);
            const Chord& y = detail::chord_by_id(d, m.chords[1]);
            const Chord& z = detail::chord_by_id(d, m.chords[2]);
            if (x.id == y.id || y.id == z.id || x.id == z.id) return invalid("repeated chord");
            if (!detail::match_r3(x, y, z)) return invalid("not an R3 triangle");
            std::vector<int> ends{x.end_first, x.end_second, y.end_first, y.end_second, z.end_first, z.end_second};
            std::sort(ends.begin(), ends.end());
            auto swapped = [&](int p) {
                for (int k = 0; k < 6; k += 2) {
                    if (p == ends[k]) return ends[k + 1];
                    if (p == ends[k + 1]) return ends[k];
                }
                return p;
            };
            std::vector<Chord> out;
            for (const Chord& c : d.chords()) {
                if (c.id == x.id || c.id == y.id || c.id == z.id) {
                    out.push_back(detail::make_chord(c.id, swapped(c.end_first), swapped(c.end_second), c.sign,
                                                     swapped(c.over_end)));
                } else {
                    out.push_back(c);
                }
            }
            return GaussDiagram(std::move(out), false);
        }
    }
    return invalid("unknown move kind");
}

struct WalkOptions {
    /// Inserts are skipped when they would exceed this many chords.
    int max_chords = 10;
    /// Fault injection for negative controls: the first R2 insertion gets
    /// equal signs, which is not a Reidemeister move.
    bool corrupt_r2_sign = false;
};

struct WalkResult {
    GaussDiagram diagram;
    std::vector<MoveSpec> moves;
};

/// Applies `steps` random moves. Each step picks a move kind uniformly among
/// the kinds with at least one site, then a site uniformly. Deterministic
/// for a given (diagram, steps, seed, options).
inline WalkResult random_walk_logged(const GaussDiagram& start, int steps, std::uint64_t seed,
                                     const WalkOptions& opts = {}) {
    detail::require_based(start);
    std::mt19937_64 rng(seed);
    WalkResult res{start, {}};
    bool corrupted = false;
    for (int step = 0; step < steps; ++step) {
        const int n = static_cast<int>(res.diagram.n_chords());
        std::vector<std::vector<MoveSpec>> options;
        for (MoveKind k : kAllMoveKinds) {
            if (k == MoveKind::R1Insert && n + 1 > opts.max_chords) continue;
            if (k == MoveKind::R2Insert && n + 2 > opts.max_chords) continue;
            auto sites = enumerate_moves(res.diagram, k);
            if (!sites.empty()) options.push_back(std::move(sites));
        }
        if (options.empty()) break;
        const auto& pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        const MoveSpec& m = pick[std::uniform_int_distribution<std::size_t>(0, pick.size() - 1)(rng)];
        res.diagram = apply_move(res.diagram, m);
        res.moves.push_back(m);
        if (opts.corrupt_r2_sign && !corrupted && m.kind == MoveKind::R2Insert) {
            std::vector<Chord> cs = res.diagram.chords();
            const int victim = res.diagram.max_id();
            for (Chord& c : cs) {
                if (c.id == victim) c.sign = -c.sign;
            }
            res.diagram = GaussDiagram(std::move(cs), false);
            corrupted = true;
        }
    }
    return res;
}

inline GaussDiagram random_walk(const GaussDiagram& start, int steps, std::uint64_t seed, const WalkOptions& opts = {}) {
    return random_walk_logged(start, steps, seed, opts).diagram;
}

}  // namespace gaussforge
