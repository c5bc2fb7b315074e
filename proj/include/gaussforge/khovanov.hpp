#pragma once

// Z/2 Khovanov homology of closed chord diagrams in the enhanced-state
// formulation. Generators are Kauffman states with each circle labelled 1 or
// x; the differential turns one positive marker negative and acts by
// multiplication (two circles merge) or comultiplication (one circle splits).
// Marker flips that keep the circle count, which only happen on non-planar
// diagrams, contribute the zero map.
//
// Gradings: i = (w - sigma)/2, j = w + i + tau, with tau = #1 - #x.

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussforge/bracket.hpp"
#include "gaussforge/error.hpp"
#include "gaussforge/gf2.hpp"
#include "gaussforge/laurent.hpp"
#include "gaussforge/maps.hpp"

namespace gaussforge {

inline constexpr int kDefaultKhovanovLimit = 12;

struct Bigrading {
    int i = 0;
    int j = 0;
    friend constexpr auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// Kauffman state plus circle labels (bit set = x, clear = 1), circles in
/// canonical order.
struct EnhancedState {
    StateMask mask = 0;
    std::uint32_t labels = 0;
    friend constexpr auto operator<=>(const EnhancedState&, const EnhancedState&) = default;
};

/// Dimensions of H^{i,j}; only nonzero entries are stored.
class GradedDims {
public:
    int dim(int i, int j) const {
        auto it = dims_.find({i, j});
        return it == dims_.end() ? 0 : it->second;
    }
    void set(int i, int j, int value) {
        if (value < 0) throw std::logic_error("negative homology dimension");
        if (value == 0) {
            dims_.erase({i, j});
        } else {
            dims_[{i, j}] = value;
        }
    }
    const std::map<Bigrading, int>& entries() const noexcept { return dims_; }
    int total() const {
        int s = 0;
        for (const auto& [g, d] : dims_) s += d;
        return s;
    }
    friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
    std::map<Bigrading, int> dims_;
};

struct KhovanovComplex {
    int n_chords = 0;
    int writhe = 0;
    std::map<Bigrading, std::vector<EnhancedState>> generators;
    /// Keyed by source grading (i, j); rows index C^{i+1,j}, columns C^{i,j}.
    std::map<Bigrading, gf2::BitMatrix> differential;
    /// Marker flips (state, chord) that preserve the circle count.
    std::size_t zero_faces = 0;

    std::size_t size(Bigrading g) const {
        auto it = generators.find(g);
        return it == generators.end() ? 0 : it->second.size();
    }
};

namespace detail {

inline void check_khovanov_input(const PseudoDiagram& s, int max_chords) {
    if (!s.closed()) throw Error(Errc::NotClosed, "the Khovanov complex needs a closed diagram");
    if (static_cast<int>(s.n_chords()) > max_chords) {
        throw Error(Errc::TooManyChords, std::to_string(s.n_chords()) + " chords exceed the Khovanov limit of " +
                                             std::to_string(max_chords));
    }
}

inline Bigrading grading_of(int n, int w, StateMask mask, int circles, std::uint32_t labels) {
    const int sigma = 2 * std::popcount(mask) - n;
    const int i = (w - sigma) / 2;
    const int tau = circles - 2 * std::popcount(labels);
    return {i, w + i + tau};
}

}  // namespace detail

inline KhovanovComplex build_complex(const PseudoDiagram& s, int max_chords = kDefaultKhovanovLimit) {
    detail::check_khovanov_input(s, max_chords);
    KhovanovComplex cx;
    const int n = static_cast<int>(s.n_chords());
    cx.n_chords = n;
    cx.writhe = writhe(s);
    const StateMask n_states = StateMask{1} << n;

    std::vector<StateCircles> circles(n_states);
    for (StateMask m = 0; m < n_states; ++m) circles[m] = state_circles(s, m);

    // local_index[m][labels] = position of the generator inside its bucket
    std::vector<std::vector<std::uint32_t>> local_index(n_states);
    for (StateMask m = 0; m < n_states; ++m) {
        const int c = circles[m].count;
        local_index[m].resize(std::size_t{1} << c);
        for (std::uint32_t l = 0; l < (std::uint32_t{1} << c); ++l) {
            auto& bucket = cx.generators[detail::grading_of(n, cx.writhe, m, c, l)];
            local_index[m][l] = static_cast<std::uint32_t>(bucket.size());
            bucket.push_back({m, l});
        }
    }
    for (const auto& [g, gens] : cx.generators) {
        const Bigrading target{g.i + 1, g.j};
        const std::size_t rows = cx.size(target);
        if (rows > 0) cx.differential.emplace(g, gf2::BitMatrix(rows, gens.size()));
    }

    auto add_incidence = [&](StateMask src_m, std::uint32_t src_l, StateMask dst_m, std::uint32_t dst_l) {
        const Bigrading from = detail::grading_of(n, cx.writhe, src_m, circles[src_m].count, src_l);
        const Bigrading to = detail::grading_of(n, cx.writhe, dst_m, circles[dst_m].count, dst_l);
        if (to.i != from.i + 1 || to.j != from.j) throw std::logic_error("differential does not preserve j");
        cx.differential.at(from).toggle(local_index[dst_m][dst_l], local_index[src_m][src_l]);
    };

    for (StateMask m = 0; m < n_states; ++m) {
        const StateCircles& sc = circles[m];
        for (int k = 0; k < n; ++k) {
            if (!((m >> k) & 1U)) continue;
            const StateMask m2 = m & ~(StateMask{1} << k);
            const StateCircles& tc = circles[m2];
            if (tc.count == sc.count) {
                ++cx.zero_faces;
                continue;
            }
            // Smallest arc of each circle, used to carry circles across.
            auto first_arcs = [](const StateCircles& x) {
                std::vector<int> rep(x.count, -1);
                for (std::size_t a = 0; a < x.circle_of_arc.size(); ++a) {
                    if (rep[x.circle_of_arc[a]] < 0) rep[x.circle_of_arc[a]] = static_cast<int>(a);
                }
                return rep;
            };
            if (tc.count == sc.count - 1) {
                // merge: S circles s1, s2 become one T circle
                const auto rep = first_arcs(sc);
                std::vector<int> to_t(sc.count);
                for (int c = 0; c < sc.count; ++c) to_t[c] = tc.circle_of_arc[rep[c]];
                int s1 = -1, s2 = -1;
                for (int a = 0; a < sc.count && s2 < 0; ++a) {
                    for (int b = a + 1; b < sc.count; ++b) {
                        if (to_t[a] == to_t[b]) {
                            s1 = a;
                            s2 = b;
                            break;
                        }
                    }
                }
                for (std::uint32_t l = 0; l < (std::uint32_t{1} << sc.count); ++l) {
                    const bool x1 = (l >> s1) & 1U;
                    const bool x2 = (l >> s2) & 1U;
                    if (x1 && x2) continue;  // m(x (x) x) = 0
                    std::uint32_t out = 0;
                    for (int c = 0; c < sc.count; ++c) {
                        if ((l >> c) & 1U) out |= std::uint32_t{1} << to_t[c];
                    }
                    add_incidence(m, l, m2, out);
                }
            } else if (tc.count == sc.count + 1) {
                // split: one S circle becomes T circles t1, t2
                const auto rep = first_arcs(tc);
                std::vector<int> to_s(tc.count);
                for (int c = 0; c < tc.count; ++c) to_s[c] = sc.circle_of_arc[rep[c]];
                int t1 = -1, t2 = -1;
                for (int a = 0; a < tc.count && t2 < 0; ++a) {
                    for (int b = a + 1; b < tc.count; ++b) {
                        if (to_s[a] == to_s[b]) {
                            t1 = a;
                            t2 = b;
                            break;
                        }
                    }
                }
                const int split = to_s[t1];
                for (std::uint32_t l = 0; l < (std::uint32_t{1} << sc.count); ++l) {
                    std::uint32_t base = 0;
                    for (int c = 0; c < tc.count; ++c) {
                        if (c != t1 && c != t2 && ((l >> to_s[c]) & 1U)) base |= std::uint32_t{1} << c;
                    }
                    if ((l >> split) & 1U) {
                        add_incidence(m, l, m2, base | (std::uint32_t{1} << t1) | (std::uint32_t{1} << t2));
                    } else {
                        add_incidence(m, l, m2, base | (std::uint32_t{1} << t1));
                        add_incidence(m, l, m2, base | (std::uint32_t{1} << t2));
                    }
                }
            } else {
                throw std::logic_error("a marker flip changed the circle count by more than one");
            }
        }
    }
    return cx;
}

inline GradedDims homology_dims(const KhovanovComplex& cx) {
    std::map<Bigrading, std::size_t> ranks;
    for (const auto& [g, d] : cx.differential) ranks[g] = gf2::rank(d);
    auto rank_at = [&](Bigrading g) -> std::size_t {
        auto it = ranks.find(g);
        return it == ranks.end() ? 0 : it->second;
    };
    GradedDims out;
    for (const auto& [g, gens] : cx.generators) {
        const std::size_t dim = gens.size() - rank_at(g) - rank_at({g.i - 1, g.j});
        out.set(g.i, g.j, static_cast<int>(dim));
    }
    return out;
}

inline GradedDims homology_dims(const PseudoDiagram& s, int max_chords = kDefaultKhovanovLimit) {
    const PseudoDiagram closed = s.closed() ? s : s.closure();
    return homology_dims(build_complex(closed, max_chords));
}

/// True when every composite C^{i,j} -> C^{i+2,j} vanishes.
inline bool differential_squares_to_zero(const KhovanovComplex& cx) {
    for (const auto& [g, d] : cx.differential) {
        auto next = cx.differential.find({g.i + 1, g.j});
        if (next == cx.differential.end()) continue;
        if (!(next->second * d).is_zero()) return false;
    }
    return true;
}

/// Sum over (i, j) of (-1)^i dim q^j, as a polynomial in q.
inline LaurentPoly euler_characteristic(const GradedDims& g) {
    LaurentPoly p;
    for (const auto& [ij, d] : g.entries()) p.add_term(ij.j, (ij.i % 2 == 0) ? d : -d);
    return p;
}

/// (q + 1/q) V(q), the value the Euler characteristic must match.
inline LaurentPoly unnormalized_jones_q(const LaurentPoly& jones_in_a) {
    const LaurentPoly q_plus_inv = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    return q_plus_inv * a_to_q(jones_in_a);
}

inline FourWay<GradedDims> kh_four(const GaussDiagram& d, int max_chords = kDefaultKhovanovLimit) {
    return four_projections(d).transform([&](const PseudoDiagram& s) { return homology_dims(s, max_chords); });
}

/// Rows "i j dim" in lexicographic order.
inline std::string render_table(const GradedDims& g) {
    std::string out;
    for (const auto& [ij, d] : g.entries()) {
        out += std::to_string(ij.i) + ' ' + std::to_string(ij.j) + ' ' + std::to_string(d) + '\n';
    }
    return out;
}

}  // namespace gaussforge
