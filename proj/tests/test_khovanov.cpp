#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace gaussforge;
using gftest::closed_pr;
namespace golden = gftest::golden;

TEST(Complex, Unknot) {
    const KhovanovComplex cx = build_complex(PseudoDiagram({}, true));
    EXPECT_EQ(cx.size({0, 1}), 1u);
    EXPECT_EQ(cx.size({0, -1}), 1u);
    EXPECT_TRUE(cx.differential.empty());
    EXPECT_EQ(homology_dims(cx), golden::unknot_kh());
}

TEST(Complex, KinkGrading) {
    // positive kink, positive marker: two circles, both labelled 1
    const KhovanovComplex cx = build_complex(PseudoDiagram({{0, 1, Sign::Positive}}, true));
    const auto& gens = cx.generators.at({0, 3});
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens[0].mask, 1u);
    EXPECT_EQ(gens[0].labels, 0u);
}

TEST(Complex, Errors) {
    try {
        build_complex(PseudoDiagram({{0, 1, Sign::Positive}}, false));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotClosed);
    }
    try {
        build_complex(closed_pr(golden::kTrefoil), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooManyChords);
    }
}

TEST(Complex, GeneratorCount) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 30; ++k) {
        const PseudoDiagram s = map_p_r(gftest::random_diagram(rng, k % 6, true));
        const KhovanovComplex cx = build_complex(s);
        std::size_t total = 0;
        for (const auto& [g, gens] : cx.generators) total += gens.size();
        std::size_t expected = 0;
        for (StateMask m = 0; m < (StateMask{1} << s.n_chords()); ++m) expected += std::size_t{1} << smooth_and_count(s, m);
        EXPECT_EQ(total, expected);
    }
}

TEST(Homology, Oracle) {
    EXPECT_EQ(homology_dims(closed_pr(golden::kTrefoil)), golden::trefoil_kh());
    EXPECT_EQ(homology_dims(closed_pr(golden::kVirtualTrefoil)), golden::virtual_trefoil_kh());
    EXPECT_EQ(homology_dims(closed_pr(golden::kFigureEight)), golden::figure_eight_kh());
    EXPECT_EQ(homology_dims(closed_pr(golden::kTrefoilInterleaved)), golden::unknot_kh());
    EXPECT_EQ(homology_dims(closed_pr("O1+ U1+")), golden::unknot_kh());
    EXPECT_EQ(homology_dims(closed_pr("O1- U1-")), golden::unknot_kh());
    // based input is closed first
    EXPECT_EQ(homology_dims(map_p_r(parse_gauss_code(golden::kTrefoil))), golden::trefoil_kh());
}

TEST(Homology, MirrorNegatesGradings) {
    // Over a field the mirror's table is the original with (i, j) -> (-i, -j).
    for (const char* code : {golden::kTrefoil, golden::kVirtualTrefoil, golden::kFigureEight}) {
        const GradedDims a = homology_dims(closed_pr(code));
        const GradedDims b = homology_dims(tau1(closed_pr(code)));
        GradedDims flipped;
        for (const auto& [g, d] : a.entries()) flipped.set(-g.i, -g.j, d);
        EXPECT_EQ(b, flipped) << code;
    }
}

TEST(Euler, Examples) {
    EXPECT_EQ(euler_characteristic(golden::unknot_kh()), gftest::poly({{-1, 1}, {1, 1}}));
    EXPECT_EQ(euler_characteristic(GradedDims()), LaurentPoly());
    for (const char* code : {golden::kTrefoil, golden::kVirtualTrefoil, golden::kFigureEight}) {
        const PseudoDiagram s = closed_pr(code);
        EXPECT_EQ(euler_characteristic(homology_dims(s)), unnormalized_jones_q(jones(s))) << code;
    }
}

TEST(Properties, RandomDiagrams) {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 120; ++k) {
        const PseudoDiagram s = map_p_r(gftest::random_diagram(rng, k % 7, true));
        const KhovanovComplex cx = build_complex(s);  // throws if j is not preserved
        EXPECT_TRUE(differential_squares_to_zero(cx)) << to_string(s);
        const GradedDims h = homology_dims(cx);
        EXPECT_EQ(euler_characteristic(h), unnormalized_jones_q(jones(s))) << to_string(s);
        for (const auto& [g, gens] : cx.generators) {
            // dims never exceed chain group sizes
            EXPECT_LE(static_cast<std::size_t>(h.dim(g.i, g.j)), gens.size());
        }
    }
}

TEST(Properties, ClassicalCodesHaveNoZeroFaces) {
    for (const char* code : {golden::kTrefoil, golden::kFigureEight}) {
        EXPECT_EQ(build_complex(closed_pr(code)).zero_faces, 0u);
    }
    EXPECT_GT(build_complex(closed_pr(golden::kVirtualTrefoil)).zero_faces, 0u);
}

TEST(Properties, ArrowBlind) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 10; ++k) {
        const GaussDiagram d = gftest::random_diagram(rng, 1 + k % 4);
        const GradedDims before = kh_four(d).pr;
        for (const Chord& c : d.chords()) EXPECT_EQ(kh_four(virtualize_chord(d, c.id)).pr, before);
    }
}

TEST(KhFour, Examples) {
    const auto e = kh_four(GaussDiagram());
    for (const GradedDims& g : {e.pr, e.pra, e.ip, e.iap}) EXPECT_EQ(g, golden::unknot_kh());
    const auto t = kh_four(parse_gauss_code(golden::kTrefoil));
    EXPECT_EQ(t.pr, golden::trefoil_kh());
    EXPECT_EQ(t.ip, golden::unknot_kh());
    EXPECT_EQ(t.iap, golden::unknot_kh());
}

TEST(Render, Table) {
    EXPECT_EQ(render_table(golden::unknot_kh()), "0 -1 1\n0 1 1\n");
    EXPECT_EQ(render_table(GradedDims()), "");
}
