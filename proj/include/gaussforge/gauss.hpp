#pragma once

// Gauss diagrams of long (based) and closed virtual knots, the O/U token
// format, and the elementary symmetries: closure, reversal, mirror and
// virtualization of a single crossing.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaussforge/error.hpp"

namespace gaussforge {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }
constexpr Sign sign_of(int v) noexcept { return v > 0 ? Sign::Positive : Sign::Negative; }

/// A crossing of a Gauss diagram. Positions count endpoints in traversal
/// order from the base point. The arrow points from `over_end` (the passage
/// on the upper branch) to the other endpoint.
struct Chord {
    int id = 0;
    int end_first = 0;
    int end_second = 0;
    Sign sign = Sign::Positive;
    int over_end = 0;

    constexpr bool over_first() const noexcept { return over_end == end_first; }
    constexpr int under_end() const noexcept { return over_end == end_first ? end_second : end_first; }

    friend constexpr auto operator<=>(const Chord&, const Chord&) = default;
};

namespace detail {

// Checks that the endpoint pairs form a double-occurrence word on 0..2n-1.
template <typename Range, typename First, typename Second>
void check_double_occurrence(const Range& chords, First first, Second second) {
    const std::size_t n = chords.size();
    std::vector<bool> used(2 * n, false);
    for (const auto& c : chords) {
        const int a = first(c);
        const int b = second(c);
        if (a < 0 || b < 0 || static_cast<std::size_t>(b) >= 2 * n || a >= b) {
            throw Error(Errc::InvalidDiagram, "chord endpoints out of range or unordered");
        }
        if (used[a] || used[b]) {
            throw Error(Errc::InvalidDiagram, "position used by two chord endpoints");
        }
        used[a] = used[b] = true;
    }
}

}  // namespace detail

/// A Gauss diagram with signs and arrows. Based (long) by default; the
/// closed flag marks a diagram of a closed virtual knot.
class GaussDiagram {
public:
    GaussDiagram() = default;

    explicit GaussDiagram(std::vector<Chord> chords, bool closed = false)
        : chords_(std::move(chords)), closed_(closed) {
        detail::check_double_occurrence(
            chords_, [](const Chord& c) { return c.end_first; },
            [](const Chord& c) { return c.end_second; });
        std::vector<int> ids;
        for (const auto& c : chords_) {
            if (c.over_end != c.end_first && c.over_end != c.end_second) {
                throw Error(Errc::InvalidDiagram, "over_end is not an endpoint of chord " + std::to_string(c.id));
            }
            if (c.id <= 0) throw Error(Errc::InvalidDiagram, "chord ids must be positive");
            ids.push_back(c.id);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
            throw Error(Errc::InvalidDiagram, "duplicate chord id");
        }
        std::sort(chords_.begin(), chords_.end(),
                  [](const Chord& a, const Chord& b) { return a.end_first < b.end_first; });
    }

    std::size_t n_chords() const noexcept { return chords_.size(); }
    std::size_t n_positions() const noexcept { return 2 * chords_.size(); }
    const std::vector<Chord>& chords() const noexcept { return chords_; }
    bool closed() const noexcept { return closed_; }
    bool based() const noexcept { return !closed_; }
    bool empty() const noexcept { return chords_.empty(); }

    /// Index into chords() of the chord owning each position.
    std::vector<int> chord_at_positions() const {
        std::vector<int> at(n_positions(), -1);
        for (std::size_t k = 0; k < chords_.size(); ++k) {
            at[chords_[k].end_first] = static_cast<int>(k);
            at[chords_[k].end_second] = static_cast<int>(k);
        }
        return at;
    }

    const Chord* find(int id) const noexcept {
        for (const auto& c : chords_) {
            if (c.id == id) return &c;
        }
        return nullptr;
    }

    int max_id() const noexcept {
        int m = 0;
        for (const auto& c : chords_) m = std::max(m, c.id);
        return m;
    }

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<Chord> chords_;
    bool closed_ = false;
};

/// Chord diagram whose chords carry a label instead of sign and arrow.
/// Instantiated with Sign for pseudo-diagrams and Letter for flat words.
template <typename Label>
class LabeledChordDiagram {
public:
    struct LabeledChord {
        int end_first = 0;
        int end_second = 0;
        Label label{};
        friend constexpr auto operator<=>(const LabeledChord&, const LabeledChord&) = default;
    };

    LabeledChordDiagram() = default;

    explicit LabeledChordDiagram(std::vector<LabeledChord> chords, bool closed = false)
        : chords_(std::move(chords)), closed_(closed) {
        detail::check_double_occurrence(
            chords_, [](const LabeledChord& c) { return c.end_first; },
            [](const LabeledChord& c) { return c.end_second; });
        std::sort(chords_.begin(), chords_.end(),
                  [](const LabeledChord& a, const LabeledChord& b) { return a.end_first < b.end_first; });
    }

    std::size_t n_chords() const noexcept { return chords_.size(); }
    std::size_t n_positions() const noexcept { return 2 * chords_.size(); }
    const std::vector<LabeledChord>& chords() const noexcept { return chords_; }
    bool closed() const noexcept { return closed_; }
    bool empty() const noexcept { return chords_.empty(); }

    LabeledChordDiagram closure() const { return LabeledChordDiagram(chords_, true); }

    template <typename F>
    LabeledChordDiagram relabel(F f) const {
        auto out = chords_;
        for (auto& c : out) c.label = f(c.label);
        return LabeledChordDiagram(std::move(out), closed_);
    }

    friend bool operator==(const LabeledChordDiagram&, const LabeledChordDiagram&) = default;

private:
    std::vector<LabeledChord> chords_;
    bool closed_ = false;
};

/// Signed chord diagram without arrows (a pseudolink diagram).
using PseudoDiagram = LabeledChordDiagram<Sign>;

// ---------------------------------------------------------------------------
// Text format: whitespace-separated tokens O<k><s> / U<k><s>, optional
// trailing @closed. Tokens are self-delimiting, so "O1+U1+" also parses.

namespace detail {

struct Occurrence {
    bool over;
    Sign sign;
    int position;
};

inline std::string offending_text(std::string_view text, std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && !std::isspace(static_cast<unsigned char>(text[to]))) ++to;
    return std::string(text.substr(from, to - from));
}

}  // namespace detail

inline GaussDiagram parse_gauss_code(std::string_view text) {
    std::map<int, std::vector<detail::Occurrence>> occ;
    bool closed = false;
    int position = 0;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    for (skip_ws(); i < text.size(); skip_ws()) {
        const std::size_t start = i;
        if (closed) {
            throw Error(Errc::MalformedToken, "token after @closed: '" + detail::offending_text(text, start) + "'");
        }
        if (text[i] == '@') {
            if (detail::offending_text(text, start) != "@closed") {
                throw Error(Errc::MalformedToken, "'" + detail::offending_text(text, start) + "'");
            }
            closed = true;
            i += 7;
            continue;
        }
        const char role = text[i];
        if (role != 'O' && role != 'U') {
            throw Error(Errc::MalformedToken, "'" + detail::offending_text(text, start) + "'");
        }
        ++i;
        long id = 0;
        const std::size_t digits_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            id = id * 10 + (text[i] - '0');
            if (id > 1'000'000) throw Error(Errc::MalformedToken, "chord id too large");
            ++i;
        }
        if (i == digits_start || id <= 0 || i >= text.size() || (text[i] != '+' && text[i] != '-')) {
            throw Error(Errc::MalformedToken, "'" + detail::offending_text(text, start) + "'");
        }
        const Sign s = text[i] == '+' ? Sign::Positive : Sign::Negative;
        ++i;
        occ[static_cast<int>(id)].push_back({role == 'O', s, position++});
    }

    std::vector<Chord> chords;
    for (const auto& [id, list] : occ) {
        if (list.size() != 2) {
            throw Error(Errc::ChordSeenOnceOrThrice,
                        "chord " + std::to_string(id) + " occurs " + std::to_string(list.size()) + " time(s)");
        }
        if (list[0].over == list[1].over) {
            throw Error(Errc::DuplicateRole, "chord " + std::to_string(id) + " has two " +
                                                 (list[0].over ? "O" : "U") + " occurrences");
        }
        if (list[0].sign != list[1].sign) {
            throw Error(Errc::SignMismatch, "occurrences of chord " + std::to_string(id) + " disagree in sign");
        }
        Chord c;
        c.id = id;
        c.end_first = list[0].position;
        c.end_second = list[1].position;
        c.sign = list[0].sign;
        c.over_end = list[0].over ? list[0].position : list[1].position;
        chords.push_back(c);
    }
    return GaussDiagram(std::move(chords), closed);
}

inline std::string serialize(const GaussDiagram& d) {
    std::string out;
    const auto at = d.chord_at_positions();
    for (std::size_t p = 0; p < at.size(); ++p) {
        const Chord& c = d.chords()[at[p]];
        if (!out.empty()) out += ' ';
        out += (static_cast<int>(p) == c.over_end) ? 'O' : 'U';
        out += std::to_string(c.id);
        out += to_char(c.sign);
    }
    if (d.closed()) out += out.empty() ? "@closed" : " @closed";
    return out;
}

// ---------------------------------------------------------------------------
// Symmetries

inline GaussDiagram close(const GaussDiagram& d) {
    if (d.closed()) throw Error(Errc::AlreadyClosed, "diagram is already closed");
    return GaussDiagram(d.chords(), true);
}

/// Reverses the traversal direction. Over/under status stays with each
/// endpoint and signs are unchanged.
inline GaussDiagram reverse(const GaussDiagram& d) {
    if (d.closed()) throw Error(Errc::RequiresBasePoint, "reverse acts on based diagrams");
    const int last = static_cast<int>(d.n_positions()) - 1;
    std::vector<Chord> out;
    out.reserve(d.n_chords());
    for (const Chord& c : d.chords()) {
        Chord r = c;
        r.end_first = last - c.end_second;
        r.end_second = last - c.end_first;
        r.over_end = last - c.over_end;
        out.push_back(r);
    }
    return GaussDiagram(std::move(out), false);
}

/// Crossing switch at every chord: sign flipped, over/under exchanged.
inline GaussDiagram mirror(const GaussDiagram& d) {
    std::vector<Chord> out = d.chords();
    for (Chord& c : out) {
        c.sign = -c.sign;
        c.over_end = c.under_end();
    }
    return GaussDiagram(std::move(out), d.closed());
}

/// Exchanges over and under at one crossing while keeping its sign.
inline GaussDiagram virtualize_chord(const GaussDiagram& d, int chord_id) {
    std::vector<Chord> out = d.chords();
    auto it = std::find_if(out.begin(), out.end(), [&](const Chord& c) { return c.id == chord_id; });
    if (it == out.end()) throw Error(Errc::NoSuchChord, "no chord with id " + std::to_string(chord_id));
    it->over_end = it->under_end();
    return GaussDiagram(std::move(out), d.closed());
}

// ---------------------------------------------------------------------------
// Pseudo-diagram text form: "<id><sign>" on the first occurrence, "<id>" on
// the second, ids numbered by first occurrence.

inline std::string to_string(const PseudoDiagram& s) {
    std::vector<std::string> tokens(s.n_positions());
    int id = 1;
    for (const auto& c : s.chords()) {
        tokens[c.end_first] = std::to_string(id) + to_char(c.label);
        tokens[c.end_second] = std::to_string(id);
        ++id;
    }
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    if (s.closed()) out += out.empty() ? "@closed" : " @closed";
    return out;
}

}  // namespace gaussforge
