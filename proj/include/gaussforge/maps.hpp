#pragma once

// Projections between Gauss-diagram variants:
//
//   p_r : GaussDiagram -> PseudoDiagram   (forget arrows)
//   p   : GaussDiagram -> FlatWord        (forget over/under, keep the
//                                          orientation type of each double point)
//   i   : FlatWord     -> PseudoDiagram   (a -> +, b -> -)
//   q   : FlatWord     -> GaussDiagram    (descending lift: first branch over)
//   tau0 swaps letters, tau1 flips signs.

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaussforge/error.hpp"
#include "gaussforge/gauss.hpp"

namespace gaussforge {

enum class Letter : std::uint8_t { a, b };

constexpr Letter operator~(Letter l) noexcept { return l == Letter::a ? Letter::b : Letter::a; }
constexpr char to_char(Letter l) noexcept { return l == Letter::a ? 'a' : 'b'; }

/// Open flat virtual knot diagram: based chord diagram with a/b letters.
using FlatWord = LabeledChordDiagram<Letter>;

/// Flat type of a crossing: `a` when (first branch, second branch) is a
/// positive frame, which happens for a positive crossing entered on the
/// over-strand first or a negative one entered on the under-strand first.
constexpr Letter letter_of(const Chord& c) noexcept {
    const bool over_first = c.over_first();
    return (c.sign == Sign::Positive) == over_first ? Letter::a : Letter::b;
}

inline PseudoDiagram map_p_r(const GaussDiagram& d) {
    std::vector<PseudoDiagram::LabeledChord> out;
    out.reserve(d.n_chords());
    for (const Chord& c : d.chords()) out.push_back({c.end_first, c.end_second, c.sign});
    return PseudoDiagram(std::move(out), d.closed());
}

inline FlatWord map_p(const GaussDiagram& d) {
    if (d.closed()) throw Error(Errc::RequiresBasePoint, "p needs a base point");
    std::vector<FlatWord::LabeledChord> out;
    out.reserve(d.n_chords());
    for (const Chord& c : d.chords()) out.push_back({c.end_first, c.end_second, letter_of(c)});
    return FlatWord(std::move(out), false);
}

inline FlatWord tau0(const FlatWord& f) {
    return f.relabel([](Letter l) { return ~l; });
}

inline PseudoDiagram tau1(const PseudoDiagram& s) {
    return s.relabel([](Sign x) { return -x; });
}

inline PseudoDiagram map_i(const FlatWord& f) {
    std::vector<PseudoDiagram::LabeledChord> out;
    out.reserve(f.n_chords());
    for (const auto& c : f.chords()) {
        out.push_back({c.end_first, c.end_second, c.label == Letter::a ? Sign::Positive : Sign::Negative});
    }
    return PseudoDiagram(std::move(out), f.closed());
}

inline FlatWord map_p_a(const GaussDiagram& d) { return tau0(map_p(d)); }
inline PseudoDiagram map_p_ra(const GaussDiagram& d) { return tau1(map_p_r(d)); }
inline PseudoDiagram map_i_a(const FlatWord& f) { return tau1(map_i(f)); }

/// Descending lift. The over-strand is always the first-traversed branch, so
/// the sign is forced by the flat type. Chord ids follow first occurrence.
inline GaussDiagram map_q(const FlatWord& f) {
    std::vector<Chord> out;
    out.reserve(f.n_chords());
    int id = 1;
    for (const auto& c : f.chords()) {
        Chord g;
        g.id = id++;
        g.end_first = c.end_first;
        g.end_second = c.end_second;
        g.sign = c.label == Letter::a ? Sign::Positive : Sign::Negative;
        g.over_end = c.end_first;
        out.push_back(g);
    }
    return GaussDiagram(std::move(out), f.closed());
}

/// The four pseudo-diagram images of a based diagram, in the order
/// (p_r, p_ra, i o p, i_a o p).
template <typename T>
struct FourWay {
    T pr;
    T pra;
    T ip;
    T iap;

    friend bool operator==(const FourWay&, const FourWay&) = default;

    template <typename F>
    auto transform(F f) const -> FourWay<decltype(f(pr))> {
        return {f(pr), f(pra), f(ip), f(iap)};
    }
};

inline constexpr const char* kProjectionNames[4] = {"pr", "pra", "ip", "iap"};

inline FourWay<PseudoDiagram> four_projections(const GaussDiagram& d) {
    if (d.closed()) throw Error(Errc::RequiresBasePoint, "four projections need a base point");
    PseudoDiagram pr = map_p_r(d);
    PseudoDiagram ip = map_i(map_p(d));
    PseudoDiagram pra = tau1(pr);
    PseudoDiagram iap = tau1(ip);
    return {std::move(pr), std::move(pra), std::move(ip), std::move(iap)};
}

// ---------------------------------------------------------------------------
// Flat word text form: the letter goes on the first occurrence only
// ("1a 2b 1 2").

inline std::string to_string(const FlatWord& f) {
    std::vector<std::string> tokens(f.n_positions());
    int id = 1;
    for (const auto& c : f.chords()) {
        tokens[c.end_first] = std::to_string(id) + to_char(c.label);
        tokens[c.end_second] = std::to_string(id);
        ++id;
    }
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

inline FlatWord parse_flat_word(std::string_view text) {
    struct Seen {
        int first = -1;
        int second = -1;
        int letter = -1;
        int count = 0;
    };
    std::map<int, Seen> seen;
    int position = 0;
    std::size_t i = 0;
    while (true) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        const std::size_t start = i;
        int id = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) id = id * 10 + (text[i++] - '0');
        int letter = -1;
        if (i < text.size() && (text[i] == 'a' || text[i] == 'b')) letter = text[i++] == 'a' ? 0 : 1;
        if (i == start || id <= 0 || (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))) {
            throw Error(Errc::MalformedToken, "'" + detail::offending_text(text, start) + "'");
        }
        Seen& s = seen[id];
        if (++s.count > 2) throw Error(Errc::ChordSeenOnceOrThrice, "chord " + std::to_string(id));
        (s.count == 1 ? s.first : s.second) = position++;
        if (s.count == 1 && letter < 0) {
            throw Error(Errc::MalformedToken, "first occurrence of chord " + std::to_string(id) + " needs a letter");
        }
        if (s.count == 2 && letter >= 0) {
            throw Error(Errc::DuplicateRole, "second occurrence of chord " + std::to_string(id) + " carries a letter");
        }
        if (letter >= 0) s.letter = letter;
    }
    std::vector<FlatWord::LabeledChord> chords;
    for (const auto& [id, s] : seen) {
        if (s.count != 2) throw Error(Errc::ChordSeenOnceOrThrice, "chord " + std::to_string(id) + " occurs once");
        chords.push_back({s.first, s.second, s.letter == 0 ? Letter::a : Letter::b});
    }
    return FlatWord(std::move(chords), false);
}

}  // namespace gaussforge
