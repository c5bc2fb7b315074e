#pragma once

// Exhaustive enumeration of small based Gauss diagrams and invariant-driven
// search over them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussforge/bracket.hpp"
#include "gaussforge/error.hpp"
#include "gaussforge/gauss.hpp"
#include "gaussforge/laurent.hpp"
#include "gaussforge/maps.hpp"

namespace gaussforge {

inline constexpr int kMaxEnumerationChords = 6;
inline constexpr int kMaxSearchChords = 5;

/// Endpoint pairs of a double-occurrence word, sorted by first endpoint.
using ChordWord = std::vector<std::pair<int, int>>;

/// (2n)! / (2^n n!) * 4^n
inline std::uint64_t based_diagram_count(int n) {
    std::uint64_t words = 1;
    for (int k = 1; k <= n; ++k) words *= static_cast<std::uint64_t>(2 * k - 1);
    return words << (2 * n);
}

/// Visits every perfect matching of positions 0..2n-1 in lexicographic order.
template <typename F>
void for_each_chord_word(int n, F&& visit) {
    if (n < 0 || n > kMaxEnumerationChords) {
        throw Error(Errc::TooLarge, "enumeration supports at most " + std::to_string(kMaxEnumerationChords) + " chords");
    }
    std::vector<bool> used(2 * n, false);
    ChordWord word;
    std::function<void()> rec = [&] {
        int first = 0;
        while (first < 2 * n && used[first]) ++first;
        if (first == 2 * n) {
            visit(static_cast<const ChordWord&>(word));
            return;
        }
        used[first] = true;
        for (int second = first + 1; second < 2 * n; ++second) {
            if (used[second]) continue;
            used[second] = true;
            word.emplace_back(first, second);
            rec();
            word.pop_back();
            used[second] = false;
        }
        used[first] = false;
    };
    rec();
}

/// Diagram on `word` with chord k (ids 1..n in word order) positive when bit
/// k of `signs` is set and entered on its over-passage first when bit k of
/// `over_first` is set.
inline GaussDiagram decorate(const ChordWord& word, std::uint32_t signs, std::uint32_t over_first) {
    std::vector<Chord> cs;
    cs.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        Chord c;
        c.id = static_cast<int>(k) + 1;
        c.end_first = word[k].first;
        c.end_second = word[k].second;
        c.sign = ((signs >> k) & 1U) ? Sign::Positive : Sign::Negative;
        c.over_end = ((over_first >> k) & 1U) ? c.end_first : c.end_second;
        cs.push_back(c);
    }
    return GaussDiagram(std::move(cs), false);
}

inline PseudoDiagram decorate_pseudo(const ChordWord& word, std::uint32_t signs, bool closed) {
    std::vector<PseudoDiagram::LabeledChord> cs;
    for (std::size_t k = 0; k < word.size(); ++k) {
        cs.push_back({word[k].first, word[k].second, ((signs >> k) & 1U) ? Sign::Positive : Sign::Negative});
    }
    return PseudoDiagram(std::move(cs), closed);
}

/// Streams every based diagram with n chords: each word, then all sign
/// masks, then all arrow masks.
template <typename F>
void enumerate_based_diagrams(int n, F&& visit) {
    for_each_chord_word(n, [&](const ChordWord& word) {
        const std::uint32_t masks = std::uint32_t{1} << n;
        for (std::uint32_t s = 0; s < masks; ++s) {
            for (std::uint32_t o = 0; o < masks; ++o) visit(decorate(word, s, o));
        }
    });
}

inline std::vector<GaussDiagram> based_diagrams(int n) {
    std::vector<GaussDiagram> out;
    enumerate_based_diagrams(n, [&](const GaussDiagram& d) { out.push_back(d); });
    return out;
}

/// Jones polynomials of every sign pattern on one word. The four Jones
/// polynomials of any decoration of the word are lookups into this table.
class WordJonesTable {
public:
    explicit WordJonesTable(const ChordWord& word) : n_(static_cast<int>(word.size())) {
        const std::uint32_t masks = std::uint32_t{1} << n_;
        table_.reserve(masks);
        for (std::uint32_t s = 0; s < masks; ++s) table_.push_back(jones(decorate_pseudo(word, s, true)));
    }

    FourWay<LaurentPoly> four_jones(std::uint32_t signs, std::uint32_t over_first) const {
        const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
        // letter a (mapped to +) exactly when sign and arrow bits agree
        const std::uint32_t letters_a = ~(signs ^ over_first) & full;
        return {table_[signs], table_[~signs & full], table_[letters_a], table_[~letters_a & full]};
    }

private:
    int n_;
    std::vector<LaurentPoly> table_;
};

using JonesPredicate = std::function<bool(const FourWay<LaurentPoly>&)>;

/// All diagrams with at most n_max chords whose four Jones polynomials
/// satisfy the predicate, sorted by serialized code.
inline std::vector<GaussDiagram> find_by_invariants(int n_max, const JonesPredicate& predicate, int n_min = 0) {
    if (n_max > kMaxSearchChords) {
        throw Error(Errc::TooLarge, "search supports at most " + std::to_string(kMaxSearchChords) + " chords");
    }
    std::vector<std::pair<std::string, GaussDiagram>> hits;
    for (int n = std::max(0, n_min); n <= n_max; ++n) {
        for_each_chord_word(n, [&](const ChordWord& word) {
            const WordJonesTable table(word);
            const std::uint32_t masks = std::uint32_t{1} << n;
            for (std::uint32_t s = 0; s < masks; ++s) {
                for (std::uint32_t o = 0; o < masks; ++o) {
                    if (predicate(table.four_jones(s, o))) {
                        GaussDiagram d = decorate(word, s, o);
                        hits.emplace_back(serialize(d), std::move(d));
                    }
                }
            }
        });
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        return a.second.n_chords() != b.second.n_chords() ? a.second.n_chords() < b.second.n_chords()
                                                          : a.first < b.first;
    });
    std::vector<GaussDiagram> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(std::move(h.second));
    return out;
}

/// Candidates for a pair separated by V o i o p but not by V:
/// `same` have V_{i o p} = V, `mirrored` have V_{i o p}(t) = V(1/t).
struct JonesSeparation {
    std::vector<GaussDiagram> same;
    std::vector<GaussDiagram> mirrored;
};

inline JonesSeparation find_ip_separation(int n_max, const LaurentPoly& target, int n_min = 0) {
    const LaurentPoly mirrored = target.inverted();
    JonesSeparation out;
    out.same = find_by_invariants(
        n_max, [&](const FourWay<LaurentPoly>& v) { return v.pr == target && v.ip == target; }, n_min);
    out.mirrored = find_by_invariants(
        n_max, [&](const FourWay<LaurentPoly>& v) { return v.pr == target && v.ip == mirrored; }, n_min);
    return out;
}

/// Two diagrams with the same V = V_{p_r} that V_{i o p} tells apart:
/// V_{i o p}(k1) = V and V_{i o p}(k2) = V(1/t), with V(t) != V(1/t).
struct SeparatedPair {
    LaurentPoly v;
    GaussDiagram k1;
    GaussDiagram k2;
};

/// One pair per polynomial V, built from the smallest (chord count, then
/// code) diagram on each side. Pairs are ordered by total chord count, then
/// by the codes of k1 and k2.
inline std::vector<SeparatedPair> find_separated_pairs(int n_max) {
    if (n_max > kMaxSearchChords) {
        throw Error(Errc::TooLarge, "search supports at most " + std::to_string(kMaxSearchChords) + " chords");
    }
    using Key = std::vector<std::pair<int, LaurentPoly::Coeff>>;
    struct Side {
        std::optional<GaussDiagram> same;
        std::optional<GaussDiagram> mirrored;
        LaurentPoly v;
    };
    auto better = [](const std::optional<GaussDiagram>& cur, const GaussDiagram& d) {
        if (!cur) return true;
        if (d.n_chords() != cur->n_chords()) return d.n_chords() < cur->n_chords();
        return serialize(d) < serialize(*cur);
    };
    std::map<Key, Side> groups;
    for (int n = 0; n <= n_max; ++n) {
        for_each_chord_word(n, [&](const ChordWord& word) {
            const WordJonesTable table(word);
            const std::uint32_t masks = std::uint32_t{1} << n;
            for (std::uint32_t s = 0; s < masks; ++s) {
                for (std::uint32_t o = 0; o < masks; ++o) {
                    const auto f = table.four_jones(s, o);
                    const LaurentPoly bar = f.pr.inverted();
                    if (f.pr == bar || (f.ip != f.pr && f.ip != bar)) continue;
                    Key key(f.pr.terms().begin(), f.pr.terms().end());
                    Side& side = groups[key];
                    side.v = f.pr;
                    auto& slot = f.ip == f.pr ? side.same : side.mirrored;
                    const GaussDiagram d = decorate(word, s, o);
                    if (better(slot, d)) slot = d;
                }
            }
        });
    }
    std::vector<SeparatedPair> out;
    for (auto& [key, side] : groups) {
        if (side.same && side.mirrored) out.push_back({side.v, *side.same, *side.mirrored});
    }
    std::sort(out.begin(), out.end(), [](const SeparatedPair& a, const SeparatedPair& b) {
        const auto na = a.k1.n_chords() + a.k2.n_chords();
        const auto nb = b.k1.n_chords() + b.k2.n_chords();
        if (na != nb) return na < nb;
        return std::pair(serialize(a.k1), serialize(a.k2)) < std::pair(serialize(b.k1), serialize(b.k2));
    });
    return out;
}

}  // namespace gaussforge
