// Copyright 2026 The dvworkbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "dv/duality.hpp"
#include "dv/error.hpp"
#include "dv/frame.hpp"
#include "dv/frame_constructions.hpp"
#include "dv/topology.hpp"
#include "oracles.hpp"

namespace {

using dv::FiniteFrame;
using dv::FiniteSpace;
using dv::PointSet;
using dv::SubordinationAlgebra;

SubordinationAlgebra order(unsigned n) { return SubordinationAlgebra::order(dv::FiniteBooleanAlgebra(n)); }

FiniteSpace s3() {
    return FiniteSpace({"Fp", "Fq", "F1"}, {PointSet{0}, PointSet{1}, PointSet{2}, PointSet{3}, PointSet{7}});
}
FiniteSpace sierpinski() { return FiniteSpace({"a", "b"}, {PointSet{0}, PointSet{2}, PointSet{3}}); }

FiniteFrame m3() {
    return FiniteFrame({"0", "x", "y", "z", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

bool isomorphic(const FiniteFrame& a, const FiniteFrame& b) { return dv::find_order_isomorphism(a, b).has_value(); }

// Finite frames: omegas of the small corpus spaces, chains and powersets.
std::vector<FiniteFrame> frame_corpus() {
    std::vector<FiniteFrame> out;
    for (const auto& x : oracle::space_corpus())
        if (x.opens().size() <= 8) out.push_back(dv::omega(x));
    for (std::size_t n = 1; n <= 8; ++n) out.push_back(dv::chain(n));
    for (unsigned k = 0; k <= 3; ++k) out.push_back(dv::boolean_lattice(k));
    return out;
}

using Hom = std::vector<std::size_t>;

Hom compose(const Hom& g, const Hom& f) {
    Hom out;
    for (std::size_t x : f) out.push_back(g[x]);
    return out;
}

// C with some pair of frame maps L1 → C ← L2 through which every pair
// L1 → M ← L2 factors uniquely, for every M in `test_frames`.
bool has_coproduct_property(const FiniteFrame& l1, const FiniteFrame& l2, const FiniteFrame& c,
                            const std::vector<FiniteFrame>& test_frames) {
    const auto in1 = oracle::frame_homs(l1, c);
    const auto in2 = oracle::frame_homs(l2, c);
    for (const auto& i1 : in1)
        for (const auto& i2 : in2) {
            bool universal = true;
            for (const auto& m : test_frames) {
                const auto out = oracle::frame_homs(c, m);
                for (const auto& f1 : oracle::frame_homs(l1, m))
                    for (const auto& f2 : oracle::frame_homs(l2, m)) {
                        std::size_t factor = 0;
                        for (const auto& h : out) factor += compose(h, i1) == f1 && compose(h, i2) == f2 ? 1 : 0;
                        universal = universal && factor == 1;
                    }
            }
            if (universal) return true;
        }
    return false;
}

TEST(Frames, CheckFrameExamples) {
    const auto b4 = dv::check_frame(dv::boolean_lattice(2));
    EXPECT_TRUE(b4.compact_regular());
    const auto c3 = dv::check_frame(dv::chain(3));
    EXPECT_TRUE(c3.is_frame.passed);
    EXPECT_TRUE(c3.is_compact.passed);
    EXPECT_FALSE(c3.is_regular.passed);
    EXPECT_TRUE(dv::check_frame(dv::boolean_lattice(1)).compact_regular());
    EXPECT_FALSE(dv::check_frame(m3()).is_frame.passed);
    const auto bl = dv::boolean_lattice(2);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ(b4.rather_below[a][b], bl.leq(a, b));
    EXPECT_THROW(FiniteFrame({"a", "b"}, {}), dv::InputError);
}

TEST(Frames, CompactRegularFramesAreExactlyBoolean) {
    for (const auto& l : frame_corpus()) {
        const auto r = dv::check_frame(l);
        ASSERT_TRUE(r.is_frame.passed);
        bool boolean = true;
        for (std::size_t a = 0; a < l.size(); ++a) {
            bool complemented = false;
            for (std::size_t b = 0; b < l.size(); ++b)
                complemented = complemented || (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top());
            boolean = boolean && complemented;
        }
        bool regular = true;
        for (std::size_t a = 0; a < l.size(); ++a) {
            std::size_t join = l.bottom();
            for (std::size_t b = 0; b < l.size(); ++b) {
                std::size_t neg = l.bottom();
                for (std::size_t c = 0; c < l.size(); ++c)
                    if (l.meet(b, c) == l.bottom()) neg = l.join(neg, c);
                if (l.join(a, neg) == l.top()) join = l.join(join, b);
            }
            regular = regular && join == a;
        }
        ASSERT_EQ(r.is_regular.passed, regular);
        ASSERT_EQ(r.compact_regular(), boolean);
    }
}

TEST(Frames, BooleanizationExamples) {
    EXPECT_TRUE(dv::booleanization(dv::boolean_lattice(2)).algebra.same_structure(order(2)));
    EXPECT_TRUE(dv::booleanization(dv::boolean_lattice(1)).algebra.same_structure(order(1)));
    EXPECT_THROW(dv::booleanization(dv::chain(3)), dv::PreconditionError);
    for (unsigned k = 0; k <= 3; ++k) {
        const auto b = dv::booleanization(dv::boolean_lattice(k));
        EXPECT_TRUE(dv::at_least(dv::classify(b.algebra), dv::Classification::de_vries));
        EXPECT_EQ(b.frame_element.size(), std::size_t{1} << k);
    }
}

TEST(Frames, RoundIdealFrameExamples) {
    EXPECT_TRUE(isomorphic(dv::round_ideal_frame(order(2)).frame, dv::boolean_lattice(2)));
    EXPECT_TRUE(isomorphic(dv::round_ideal_frame(order(1)).frame, dv::boolean_lattice(1)));
    EXPECT_TRUE(isomorphic(dv::round_ideal_frame(order(3)).frame, dv::boolean_lattice(3)));
    EXPECT_TRUE(dv::check_frame(dv::round_ideal_frame(order(3)).frame).compact_regular());
    EXPECT_THROW(dv::round_ideal_frame(SubordinationAlgebra::trivial(dv::FiniteBooleanAlgebra(2))),
                 dv::PreconditionError);
}

TEST(Frames, GurExamples) {
    EXPECT_TRUE(dv::verify_gur_frame(dv::boolean_lattice(2)).passed());
    EXPECT_TRUE(dv::verify_gur_algebra(order(2)).passed());
    EXPECT_TRUE(dv::verify_gur_frame(dv::boolean_lattice(1)).passed());
    EXPECT_TRUE(dv::verify_gur(dv::boolean_lattice(3), order(3)).passed());
    EXPECT_TRUE(dv::find_algebra_isomorphism(order(2), dv::booleanization(dv::boolean_lattice(2)).algebra));
    EXPECT_FALSE(dv::find_algebra_isomorphism(order(2), SubordinationAlgebra::trivial(dv::FiniteBooleanAlgebra(2))));
}

TEST(Frames, XiAndUvExamples) {
    const auto b4 = dv::boolean_lattice(2);
    EXPECT_TRUE(dv::find_homeomorphism(dv::xi_space(b4), s3()).has_value());
    EXPECT_EQ(dv::xi_space(dv::boolean_lattice(1)).size(), 1U);
    const auto xi8 = dv::xi_space(dv::boolean_lattice(3));
    EXPECT_EQ(xi8.size(), 7U);
    EXPECT_TRUE(dv::find_homeomorphism(xi8, dv::lambda_space(order(3)).space).has_value());
    // positions in L⁻: 0 ↦ "0", 1 ↦ "a", 2 ↦ "b"
    EXPECT_EQ(dv::box_set(b4, 1), PointSet{4});
    EXPECT_EQ(dv::box_set(b4, 3), PointSet{7});
    for (unsigned k = 0; k <= 3; ++k) EXPECT_TRUE(dv::box_set(dv::boolean_lattice(k), 0).empty());
    EXPECT_EQ(dv::uv_space(dv::boolean_lattice(4)).size(), 15U);
    for (unsigned k = 0; k <= 3; ++k) EXPECT_TRUE(dv::verify_xi_uv(dv::boolean_lattice(k)).passed()) << k;
    EXPECT_THROW(dv::xi_space(dv::chain(3)), dv::PreconditionError);
}

// Identifying b ∈ L⁻ with the filter (I_b)^δ, where I_b = {c ∈ B(L) | c ≺ b},
// carries ǎ onto the basic open of ¬¬a. For Boolean L that is a itself, and
// the alternative reading with ¬a already fails on the 4-element lattice.
TEST(Frames, XiBasicOpensMatchDoubleNegation) {
    for (unsigned k = 1; k <= 3; ++k) {
        const auto l = dv::boolean_lattice(k);
        const auto bz = dv::booleanization(l);
        const auto d = dv::lambda_space(bz.algebra);
        const auto& base = bz.algebra.base();
        const auto non_top = l.non_top();
        std::vector<std::size_t> point_of(non_top.size());
        for (std::size_t i = 0; i < non_top.size(); ++i) {
            dv::Element join = base.bottom();
            for (dv::Element c : base.elements())
                if (l.rather_below(bz.frame_element[c.index()], non_top[i])) join = base.join(join, c);
            const auto pt = d.point_of(dv::Filter(base.complement(join)));
            ASSERT_TRUE(pt.has_value());
            point_of[i] = *pt;
        }
        std::size_t neg_mismatches = 0;
        for (std::size_t a = 0; a < l.size(); ++a) {
            PointSet image;
            for (std::size_t i : dv::check_set(l, a).points()) image.insert(point_of[i]);
            const std::size_t nn = l.pseudo_complement(l.pseudo_complement(a));
            EXPECT_EQ(image, d.hat_of(bz.encode(nn)));
            if (image != d.hat_of(bz.encode(l.pseudo_complement(a)))) ++neg_mismatches;
        }
        EXPECT_EQ(neg_mismatches, l.size());
    }
}

TEST(Frames, PointsExamples) {
    const auto d2 = dv::frame_points(dv::boolean_lattice(2));
    EXPECT_EQ(d2.size(), 2U);
    EXPECT_EQ(d2.opens().size(), 4U);
    EXPECT_EQ(dv::frame_points(dv::boolean_lattice(1)).size(), 1U);
    EXPECT_TRUE(dv::find_homeomorphism(dv::frame_points(dv::chain(3)), sierpinski()).has_value());
}

TEST(Frames, PointsAreCompletelyPrimeFilters) {
    for (const auto& l : frame_corpus()) {
        const auto pts = dv::frame_points(l);
        const auto primes = dv::join_prime_elements(l);
        ASSERT_EQ(pts.size(), primes.size());
        std::vector<oracle::Mask> got;
        for (std::size_t a : primes) {
            oracle::Mask up = 0;
            for (std::size_t b = 0; b < l.size(); ++b)
                if (l.leq(a, b)) up |= oracle::Mask{1} << b;
            got.push_back(up);
        }
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, oracle::completely_prime_filters(l));
        for (std::size_t b = 0; b < l.size(); ++b) {
            PointSet u;
            for (std::size_t i = 0; i < primes.size(); ++i)
                if (l.leq(primes[i], b)) u.insert(i);
            ASSERT_TRUE(pts.is_open(u));
        }
        ASSERT_LE(pts.opens().size(), l.size());
    }
}

TEST(Frames, OmegaExamples) {
    EXPECT_TRUE(isomorphic(dv::omega(dv::discrete_space(2)), dv::boolean_lattice(2)));
    EXPECT_EQ(dv::omega(s3()).size(), 5U);
    EXPECT_TRUE(isomorphic(dv::omega(dv::discrete_space(1)), dv::boolean_lattice(1)));
}

TEST(Frames, FiniteT0SpacesAreSober) {
    for (const auto& x : oracle::space_corpus()) {
        if (!dv::is_t0(x)) continue;
        const auto back = dv::frame_points(dv::omega(x));
        ASSERT_TRUE(dv::find_homeomorphism(back, x).has_value());
    }
}

TEST(Frames, CoproductOfTwoOnePointPowersetsIsTwoElementLattice) {
    const auto two = dv::boolean_lattice(1);
    const auto c = dv::frame_coproduct(two, two);
    EXPECT_TRUE(isomorphic(c, two));
    const std::vector<FiniteFrame> tests{two, dv::chain(3), dv::boolean_lattice(2), dv::omega(s3()),
                                         dv::boolean_lattice(3)};
    EXPECT_TRUE(has_coproduct_property(two, two, c, tests));
    EXPECT_FALSE(has_coproduct_property(two, two, dv::boolean_lattice(2), tests));
}

TEST(Frames, CoproductWithTwoPointPowerset) {
    const auto two = dv::boolean_lattice(1);
    const auto b4 = dv::boolean_lattice(2);
    const auto c = dv::frame_coproduct(two, b4);
    EXPECT_TRUE(isomorphic(c, b4));
    const std::vector<FiniteFrame> tests{two, dv::chain(3), b4, dv::omega(s3())};
    EXPECT_TRUE(has_coproduct_property(two, b4, c, tests));
    EXPECT_FALSE(has_coproduct_property(two, b4, two, tests));
}

TEST(Frames, CoproductLaws) {
    const auto two = dv::boolean_lattice(1);
    for (const auto& l : {dv::boolean_lattice(2), dv::boolean_lattice(3), dv::chain(3), dv::omega(s3())})
        EXPECT_TRUE(isomorphic(dv::frame_coproduct(l, two), l));
    EXPECT_TRUE(isomorphic(dv::frame_coproduct(dv::boolean_lattice(2), dv::boolean_lattice(2)), dv::boolean_lattice(4)));
}

TEST(Frames, RoundIsoAndChfis) {
    for (unsigned n = 0; n <= 3; ++n) EXPECT_TRUE(dv::verify_round_iso(order(n)).passed()) << n;
    EXPECT_EQ(dv::woro_frame(s3()).frame.size(), 4U);
    EXPECT_EQ(dv::woro_frame(dv::lambda_space(order(1)).space).frame.size(), 2U);
    EXPECT_EQ(dv::woro_frame(dv::lambda_space(order(3)).space).frame.size(), 8U);
    for (unsigned k = 0; k <= 3; ++k) {
        const auto l = dv::boolean_lattice(k);
        EXPECT_TRUE(dv::verify_chfis(l).passed());
        EXPECT_TRUE(isomorphic(dv::woro_frame(dv::xi_space(l)).frame, l));
    }
    EXPECT_THROW(dv::woro_frame(sierpinski()), dv::PreconditionError);
}

TEST(Frames, CompactRegularCorpusSatisfiesEveryConstruction) {
    for (const auto& l : frame_corpus()) {
        if (!dv::check_frame(l).compact_regular()) continue;
        const auto bz = dv::booleanization(l);
        EXPECT_TRUE(dv::at_least(dv::classify(bz.algebra), dv::Classification::de_vries));
        EXPECT_TRUE(dv::verify_gur(l, bz.algebra).passed());
        EXPECT_TRUE(dv::verify_xi_uv(l).passed());
        EXPECT_TRUE(dv::verify_chfis(l).passed());
        EXPECT_TRUE(isomorphic(dv::woro_frame(dv::xi_space(l)).frame, l));
    }
    for (unsigned n = 0; n <= 3; ++n) {
        const auto r = dv::round_ideal_frame(order(n));
        EXPECT_EQ(r.ideals.size(), r.frame.size());
        EXPECT_TRUE(dv::verify_xi_uv(r.frame).passed());
        EXPECT_TRUE(dv::verify_chfis(r.frame).passed());
        EXPECT_TRUE(dv::verify_gur_frame(r.frame).passed());
    }
}

TEST(Frames, ChoiceFreeProducts) {
    const auto d2 = dv::discrete_space(std::vector<std::string>{"x", "y"});
    const std::array<std::size_t, 3> counts{1, 3, 15};
    std::vector<FiniteSpace> family;
    for (std::size_t k = 0; k <= 2; ++k) {
        const auto r = dv::choice_free_product(family);
        EXPECT_EQ(r.space.size(), counts[k]);
        EXPECT_TRUE(r.verdict.passed()) << k;
        EXPECT_TRUE(dv::is_compact(r.space));
        family.push_back(d2);
    }
    const auto r = dv::choice_free_product({d2, d2});
    EXPECT_TRUE(dv::is_dv_space(r.space).passed());
    EXPECT_TRUE(dv::find_homeomorphism(r.space, dv::uv_space(dv::omega(dv::discrete_space(4)))).has_value());
    const auto d3 = dv::discrete_space(3);
    const auto single = dv::choice_free_product({d3});
    EXPECT_EQ(single.space.size(), 7U);
    EXPECT_TRUE(dv::find_homeomorphism(single.space, dv::uv_space(dv::omega(d3))).has_value());
    EXPECT_THROW(dv::choice_free_product({s3()}), dv::PreconditionError);
}

}  // namespace
