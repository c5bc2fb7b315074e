#pragma once

// Seeded generators and frozen reference values shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "gaussforge/gaussforge.hpp"

namespace gftest {

using namespace gaussforge;

/// Uniform random based diagram with n chords. With `spread_ids` the chord
/// ids are distinct values up to 10n instead of 1..n.
inline GaussDiagram random_diagram(std::mt19937_64& rng, int n, bool closed = false, bool spread_ids = false) {
    std::vector<int> pos(2 * n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<int> ids(n);
    if (spread_ids) {
        std::vector<int> pool(10 * n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::copy_n(pool.begin(), n, ids.begin());
    } else {
        std::iota(ids.begin(), ids.end(), 1);
    }
    std::bernoulli_distribution coin(0.5);
    std::vector<Chord> cs;
    for (int k = 0; k < n; ++k) {
        Chord c;
        c.id = ids[k];
        c.end_first = std::min(pos[2 * k], pos[2 * k + 1]);
        c.end_second = std::max(pos[2 * k], pos[2 * k + 1]);
        c.sign = coin(rng) ? Sign::Positive : Sign::Negative;
        c.over_end = coin(rng) ? c.end_first : c.end_second;
        cs.push_back(c);
    }
    return GaussDiagram(std::move(cs), closed);
}

inline GaussDiagram random_diagram_upto(std::mt19937_64& rng, int n_max, bool closed = false) {
    return random_diagram(rng, std::uniform_int_distribution<int>(0, n_max)(rng), closed);
}

/// Every flat word with n chords.
inline std::vector<FlatWord> all_flat_words(int n) {
    std::vector<FlatWord> out;
    for_each_chord_word(n, [&](const ChordWord& w) {
        for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
            std::vector<FlatWord::LabeledChord> cs;
            for (int k = 0; k < n; ++k) {
                cs.push_back({w[k].first, w[k].second, ((m >> k) & 1U) ? Letter::a : Letter::b});
            }
            out.emplace_back(std::move(cs), false);
        }
    });
    return out;
}

/// Polynomial in A from (exponent, coefficient) pairs.
inline LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

inline GradedDims dims(std::initializer_list<std::tuple<int, int, int>> entries) {
    GradedDims g;
    for (auto [i, j, d] : entries) g.set(i, j, d);
    return g;
}

// Reference values produced by tests/oracles/bracket_oracle.py, which
// computes states by half-edge walks and homology by dense Python rank.
namespace golden {

inline const char* const kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
inline const char* const kVirtualTrefoil = "O1+ O2+ U1+ U2+";
inline const char* const kFigureEight = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";
inline const char* const kTrefoilInterleaved = "O1+ U2- O3+ U1+ O2- U3+";

inline LaurentPoly trefoil_bracket() { return poly({{-7, 1}, {-3, -1}, {5, -1}}); }
inline LaurentPoly trefoil_jones() { return poly({{-16, -1}, {-12, 1}, {-4, 1}}); }
inline LaurentPoly virtual_trefoil_bracket() { return poly({{-4, -1}, {0, 1}, {2, 1}}); }
inline LaurentPoly virtual_trefoil_jones() { return poly({{-10, -1}, {-6, 1}, {-4, 1}}); }
inline LaurentPoly figure_eight_jones() { return poly({{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}); }
inline LaurentPoly kink_bracket() { return poly({{3, -1}}); }

inline GradedDims unknot_kh() { return dims({{0, -1, 1}, {0, 1, 1}}); }
inline GradedDims trefoil_kh() {
    return dims({{0, 1, 1}, {0, 3, 1}, {2, 5, 1}, {2, 7, 1}, {3, 7, 1}, {3, 9, 1}});
}
inline GradedDims virtual_trefoil_kh() {
    return dims({{0, 1, 1}, {0, 3, 1}, {1, 2, 1}, {1, 4, 1}, {2, 4, 1}, {2, 6, 1}});
}
inline GradedDims figure_eight_kh() {
    return dims({{-2, -5, 1}, {-2, -3, 1}, {-1, -3, 1}, {-1, -1, 1}, {0, -1, 1},
                 {0, 1, 1},   {1, 1, 1},   {1, 3, 1},   {2, 3, 1},   {2, 5, 1}});
}

}  // namespace golden

inline PseudoDiagram closed_pr(const char* code) { return map_p_r(close(parse_gauss_code(code))); }

}  // namespace gftest

namespace gaussforge {
// readable failure messages
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << render(p, Variable::A); }
}  // namespace gaussforge
