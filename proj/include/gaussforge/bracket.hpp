#pragma once

// Kauffman state sum on chord diagrams and the Jones polynomial of each of
// the four projections of a long virtual knot.
//
// A state assigns a marker to every chord (bit set = positive marker, the
// A-smoothing). The A-smoothing is the oriented one on positive chords and
// the disoriented one on negative chords; this is what makes a positive kink
// evaluate to -A^3.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gaussforge/error.hpp"
#include "gaussforge/gauss.hpp"
#include "gaussforge/laurent.hpp"
#include "gaussforge/maps.hpp"

namespace gaussforge {

using StateMask = std::uint32_t;

inline constexpr int kDefaultBracketLimit = 20;
inline constexpr int kMaxStateChords = 31;

/// Circles of one Kauffman state. Arc k runs from position k to position
/// k+1 (cyclically); circles are numbered in order of their smallest arc.
struct StateCircles {
    int count = 0;
    std::vector<std::uint8_t> circle_of_arc;
};

namespace detail {

struct ArcUnionFind {
    std::array<std::uint8_t, 2 * kMaxStateChords + 2> parent{};

    explicit ArcUnionFind(int m) {
        for (int k = 0; k < m; ++k) parent[k] = static_cast<std::uint8_t>(k);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Returns true when two distinct classes were joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = static_cast<std::uint8_t>(b);
        return true;
    }
};

// Smoothing joins at one chord, as arc pairs.
inline std::array<std::pair<int, int>, 2> smoothing_joins(int u, int v, int m, bool oriented) {
    const int in_u = (u + m - 1) % m;
    const int in_v = (v + m - 1) % m;
    if (oriented) return {{{in_u, v}, {in_v, u}}};
    return {{{in_u, in_v}, {u, v}}};
}

inline void require_closed(const PseudoDiagram& s) {
    if (!s.closed()) throw Error(Errc::NotClosed, "state sums need a closed diagram");
}

inline void require_within(const PseudoDiagram& s, int limit) {
    if (static_cast<int>(s.n_chords()) > std::min(limit, kMaxStateChords)) {
        throw Error(Errc::TooManyChords, std::to_string(s.n_chords()) + " chords exceed the limit of " +
                                             std::to_string(std::min(limit, kMaxStateChords)));
    }
}

inline bool is_oriented(Sign sign, bool positive_marker) noexcept {
    return (sign == Sign::Positive) == positive_marker;
}

}  // namespace detail

/// Number of circles of the state `mask` on a closed diagram.
inline int smooth_and_count(const PseudoDiagram& s, StateMask mask) {
    detail::require_closed(s);
    detail::require_within(s, kMaxStateChords);
    const int m = static_cast<int>(s.n_positions());
    if (m == 0) return 1;
    detail::ArcUnionFind uf(m);
    int count = m;
    for (std::size_t k = 0; k < s.n_chords(); ++k) {
        const auto& c = s.chords()[k];
        const bool oriented = detail::is_oriented(c.label, (mask >> k) & 1U);
        for (auto [x, y] : detail::smoothing_joins(c.end_first, c.end_second, m, oriented)) {
            if (uf.unite(x, y)) --count;
        }
    }
    return count;
}

/// Same partition as smooth_and_count, with canonical circle numbering.
inline StateCircles state_circles(const PseudoDiagram& s, StateMask mask) {
    detail::require_closed(s);
    detail::require_within(s, kMaxStateChords);
    const int m = static_cast<int>(s.n_positions());
    StateCircles out;
    if (m == 0) {
        out.count = 1;
        return out;
    }
    detail::ArcUnionFind uf(m);
    for (std::size_t k = 0; k < s.n_chords(); ++k) {
        const auto& c = s.chords()[k];
        const bool oriented = detail::is_oriented(c.label, (mask >> k) & 1U);
        for (auto [x, y] : detail::smoothing_joins(c.end_first, c.end_second, m, oriented)) uf.unite(x, y);
    }
    out.circle_of_arc.assign(m, 0);
    std::array<int, 2 * kMaxStateChords + 2> label{};
    label.fill(-1);
    for (int k = 0; k < m; ++k) {
        const int r = uf.find(k);
        if (label[r] < 0) label[r] = out.count++;
        out.circle_of_arc[k] = static_cast<std::uint8_t>(label[r]);
    }
    return out;
}

inline int writhe(const PseudoDiagram& s) {
    int w = 0;
    for (const auto& c : s.chords()) w += to_int(c.label);
    return w;
}

inline int writhe(const GaussDiagram& d) {
    int w = 0;
    for (const auto& c : d.chords()) w += to_int(c.sign);
    return w;
}

/// -A^2 - A^-2
inline LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

/// Sum over all 2^n states of A^(sigma) (-A^2 - A^-2)^(circles - 1).
inline LaurentPoly kauffman_bracket(const PseudoDiagram& s, int max_chords = kDefaultBracketLimit) {
    detail::require_closed(s);
    detail::require_within(s, max_chords);
    const int n = static_cast<int>(s.n_chords());
    const int m = 2 * n;
    if (n == 0) return LaurentPoly(1);

    // histogram[positive markers][circles]
    std::vector<std::vector<std::int64_t>> histogram(n + 1, std::vector<std::int64_t>(m + 1, 0));
    const StateMask states = StateMask{1} << n;
    for (StateMask mask = 0; mask < states; ++mask) {
        detail::ArcUnionFind uf(m);
        int count = m;
        for (int k = 0; k < n; ++k) {
            const auto& c = s.chords()[k];
            const bool oriented = detail::is_oriented(c.label, (mask >> k) & 1U);
            for (auto [x, y] : detail::smoothing_joins(c.end_first, c.end_second, m, oriented)) {
                if (uf.unite(x, y)) --count;
            }
        }
        ++histogram[std::popcount(mask)][count];
    }

    std::vector<LaurentPoly> loop_powers{LaurentPoly(1)};
    for (int c = 1; c < m; ++c) loop_powers.push_back(loop_powers.back() * loop_value());

    LaurentPoly total;
    for (int pos = 0; pos <= n; ++pos) {
        const int sigma = 2 * pos - n;
        for (int c = 1; c <= m; ++c) {
            if (histogram[pos][c] == 0) continue;
            total += (loop_powers[c - 1] * LaurentPoly(histogram[pos][c])).shifted(sigma);
        }
    }
    return total;
}

/// Normalised Jones polynomial (-A^3)^(-w) <D>, in A (t = A^-4). Based
/// diagrams are closed first.
inline LaurentPoly jones(const PseudoDiagram& s, int max_chords = kDefaultBracketLimit) {
    const PseudoDiagram closed = s.closed() ? s : s.closure();
    const int w = writhe(closed);
    LaurentPoly b = kauffman_bracket(closed, max_chords);
    b = b.shifted(-3 * w);
    return (w % 2 == 0) ? b : -b;
}

inline FourWay<LaurentPoly> four_jones(const GaussDiagram& d, int max_chords = kDefaultBracketLimit) {
    return four_projections(d).transform([&](const PseudoDiagram& s) { return jones(s, max_chords); });
}

}  // namespace gaussforge
