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

#include <array>
#include <optional>
#include <variant>

#include "dv/boolean_algebra.hpp"
#include "dv/error.hpp"
#include "dv/subordination.hpp"
#include "oracles.hpp"

namespace {

using dv::Axiom;
using dv::Element;
using dv::FiniteBooleanAlgebra;
using dv::SubordinationAlgebra;

const Element p{1}, q{2}, zero{0}, one{3};

SubordinationAlgebra b2() { return SubordinationAlgebra::order(FiniteBooleanAlgebra(2)); }
SubordinationAlgebra c2() { return SubordinationAlgebra::trivial(FiniteBooleanAlgebra(2)); }

std::optional<oracle::Tuple> oracle_axiom(const oracle::Alg& a, Axiom ax) {
    switch (ax) {
        case Axiom::A1: return oracle::a1(a);
        case Axiom::A2: return oracle::a2(a);
        case Axiom::A3: return oracle::a3(a);
        case Axiom::A4: return oracle::a4(a);
        case Axiom::A5: return oracle::a5(a);
        case Axiom::A6: return oracle::a6(a);
        case Axiom::A7: return oracle::a7(a);
        case Axiom::zero_dimensional: return oracle::zero_dim(a);
    }
    return std::nullopt;
}

oracle::Tuple bits(const std::vector<Element>& w) {
    oracle::Tuple out;
    for (Element e : w) out.push_back(e.bits());
    return out;
}

TEST(BooleanAlgebra, TwoAtomExamples) {
    const FiniteBooleanAlgebra b(2);
    EXPECT_EQ(b.meet(p, q), zero);
    const std::array<Element, 2> atoms{p, q};
    EXPECT_EQ(b.join_all(atoms), one);
    EXPECT_EQ(b.complement(p), q);
    EXPECT_EQ(b.format(p), "{p}");
    EXPECT_EQ(b.format(zero), "0");
    EXPECT_EQ(b.format(one), "1");
    EXPECT_EQ(b.compact_name(one), "1");
    EXPECT_EQ(b.parse_element("{p}"), p);
    EXPECT_EQ(b.parse_element("{}"), zero);
    EXPECT_EQ(b.parse_element("{p,q}"), one);
}

TEST(BooleanAlgebra, LawsHoldOnEveryElementUpToFourAtoms) {
    for (unsigned n = 0; n <= 4; ++n) {
        const FiniteBooleanAlgebra b(n);
        for (Element x : b.elements()) {
            EXPECT_EQ(b.meet(x, b.complement(x)), b.bottom());
            EXPECT_EQ(b.join(x, b.complement(x)), b.top());
            EXPECT_EQ(b.complement(b.complement(x)), x);
            for (Element y : b.elements()) {
                EXPECT_EQ(b.complement(b.meet(x, y)), b.join(b.complement(x), b.complement(y)));
                EXPECT_EQ(b.leq(x, y), b.meet(x, y) == x);
                EXPECT_EQ(b.join(x, b.meet(x, y)), x);
                for (Element z : b.elements())
                    EXPECT_EQ(b.meet(x, b.join(y, z)), b.join(b.meet(x, y), b.meet(x, z)));
            }
        }
    }
}

TEST(BooleanAlgebra, EmptyFamiliesAndApply) {
    const FiniteBooleanAlgebra b(2);
    EXPECT_EQ(b.join_all(std::span<const Element>{}), zero);
    EXPECT_EQ(b.meet_all(std::span<const Element>{}), one);
    const std::array<Element, 2> pq{p, q};
    EXPECT_EQ(std::get<Element>(dv::apply(b, dv::ElementOp::meet, pq)), zero);
    EXPECT_TRUE(std::get<bool>(dv::apply(b, dv::ElementOp::leq, std::array<Element, 2>{p, one})));
    EXPECT_THROW(dv::apply(b, dv::ElementOp::complement, pq), dv::InputError);
    EXPECT_THROW(b.element(4), dv::InputError);
    EXPECT_THROW(b.meet(p, Element{8}), dv::InputError);
    EXPECT_THROW(FiniteBooleanAlgebra(7), dv::InputError);
    EXPECT_THROW(b.parse_element("{r}"), dv::Error);
}

TEST(Axioms, TwoAtomOrderPassesEverything) {
    const auto report = dv::check_axioms(b2());
    for (Axiom ax : dv::kAllAxioms) EXPECT_TRUE(report.holds(ax)) << dv::to_string(ax);
    EXPECT_TRUE(report.compingent());
}

TEST(Axioms, TrivialRelationFailsOnlyA7AtP) {
    const auto report = dv::check_axioms(c2());
    for (Axiom ax : {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5, Axiom::A6})
        EXPECT_TRUE(report.holds(ax)) << dv::to_string(ax);
    ASSERT_FALSE(report.holds(Axiom::A7));
    EXPECT_EQ(report[Axiom::A7].witness, std::vector<Element>{p});
    EXPECT_TRUE(report.contact());
    EXPECT_FALSE(report.compingent());
}

TEST(Axioms, EmptyRelationFailsA1) {
    const SubordinationAlgebra empty(FiniteBooleanAlgebra(1), {0, 0});
    const auto report = dv::check_axioms(empty);
    ASSERT_FALSE(report.holds(Axiom::A1));
    EXPECT_EQ(report[Axiom::A1].witness, (std::vector<Element>{Element{1}, Element{1}}));
}

TEST(Axioms, MatchOracleWithLeastWitnessOnAllSmallTables) {
    for (unsigned n = 0; n <= 2; ++n) {
        for (std::uint64_t code = 0; code < oracle::table_count(n); ++code) {
            const auto v = oracle::table(n, code);
            const auto o = oracle::from(v);
            const auto report = dv::check_axioms(v);
            for (Axiom ax : dv::kAllAxioms) {
                const auto expected = oracle_axiom(o, ax);
                ASSERT_EQ(report.holds(ax), !expected.has_value()) << "n=" << n << " code=" << code;
                if (expected) ASSERT_EQ(bits(report[ax].witness), *expected) << "n=" << n << " code=" << code;
            }
        }
    }
}

TEST(Axioms, FullAxiomsForceOrderOnAllSmallTables) {
    for (unsigned n = 0; n <= 2; ++n) {
        std::size_t compingent = 0;
        for (std::uint64_t code = 0; code < oracle::table_count(n); ++code) {
            const auto v = oracle::table(n, code);
            const bool all = dv::check_axioms(v).compingent();
            ASSERT_EQ(all, oracle::is_order(oracle::from(v))) << "n=" << n << " code=" << code;
            compingent += all ? 1 : 0;
        }
        EXPECT_EQ(compingent, 1U);
    }
    for (unsigned n = 0; n <= 3; ++n)
        EXPECT_TRUE(dv::check_axioms(SubordinationAlgebra::order(FiniteBooleanAlgebra(n))).compingent());
}

// At three atoms every A1–A5 table is a ≺ b iff R[a] ⊆ b for a relation R on
// atoms (A3, A4 and join-stability make it determined by the atoms), so the
// 512 atom relations cover the case.
TEST(Axioms, FullAxiomsForceOrderOnThreeAtomsViaAtomRelations) {
    const FiniteBooleanAlgebra b(3);
    std::size_t compingent = 0;
    for (unsigned r = 0; r < 512; ++r) {
        const auto v = SubordinationAlgebra::from_predicate(b, [&](Element x, Element y) {
            for (unsigned i = 0; i < 3; ++i) {
                if (!((x.bits() >> i) & 1U)) continue;
                const unsigned image = (r >> (3 * i)) & 7U;
                if ((image & ~y.bits()) != 0) return false;
            }
            return true;
        });
        const bool all = dv::check_axioms(v).compingent();
        EXPECT_EQ(all, oracle::is_order(oracle::from(v))) << r;
        compingent += all ? 1 : 0;
    }
    EXPECT_EQ(compingent, 1U);
}

TEST(Axioms, ContactTablesAreSymmetricAndJoinStable) {
    for (unsigned n = 0; n <= 2; ++n) {
        for (std::uint64_t code = 0; code < oracle::table_count(n); ++code) {
            const auto v = oracle::table(n, code);
            const auto report = dv::check_axioms(v);
            const auto o = oracle::from(v);
            if (report.holds(Axiom::A5)) {
                for (std::uint32_t a = 0; a < o.size(); ++a)
                    for (std::uint32_t b = 0; b < o.size(); ++b)
                        if (o.prec(a, b)) ASSERT_TRUE(o.prec(o.neg(b), o.neg(a)));
            }
            if (!report.contact()) continue;
            for (std::uint32_t a = 0; a < o.size(); ++a)
                for (std::uint32_t b = 0; b < o.size(); ++b)
                    for (std::uint32_t c = 0; c < o.size(); ++c)
                        for (std::uint32_t d = 0; d < o.size(); ++d)
                            if (o.prec(a, b) && o.prec(c, d)) ASSERT_TRUE(o.prec(a | c, b | d));
        }
    }
}

TEST(Classify, Examples) {
    EXPECT_EQ(dv::classify(b2()), dv::Classification::zero_dimensional_de_vries);
    EXPECT_EQ(dv::to_string(dv::classify(b2())), "zero-dimensional deVries");
    EXPECT_EQ(dv::classify(c2()), dv::Classification::contact);
    EXPECT_EQ(dv::classify(SubordinationAlgebra::order(FiniteBooleanAlgebra(1))),
              dv::Classification::zero_dimensional_de_vries);
    EXPECT_EQ(dv::classify(SubordinationAlgebra(FiniteBooleanAlgebra(1), {0, 0})), dv::Classification::none);
}

TEST(Classify, MatchesOracleOnAllSmallTables) {
    for (unsigned n = 0; n <= 2; ++n) {
        for (std::uint64_t code = 0; code < oracle::table_count(n); ++code) {
            const auto v = oracle::table(n, code);
            const auto o = oracle::from(v);
            dv::Classification expected = dv::Classification::none;
            if (oracle::subordination(o)) expected = dv::Classification::subordination;
            if (oracle::contact(o)) expected = dv::Classification::contact;
            if (oracle::compingent(o))
                expected = !oracle::zero_dim(o) ? dv::Classification::zero_dimensional_de_vries
                                               : dv::Classification::de_vries;
            ASSERT_EQ(dv::classify(v), expected) << "n=" << n << " code=" << code;
            EXPECT_TRUE(dv::at_least(dv::classify(v), dv::Classification::none));
        }
    }
}

TEST(Tables, LexOrderAndStructure) {
    const auto a = oracle::table(1, 0b0101);
    const auto b = oracle::table(1, 0b1101);
    EXPECT_TRUE(dv::table_lex_less(a, b) || dv::table_lex_less(b, a));
    EXPECT_FALSE(dv::table_lex_less(a, a));
    EXPECT_TRUE(dv::table_lex_less(SubordinationAlgebra(), b2()));
    const SubordinationAlgebra renamed = SubordinationAlgebra::order(FiniteBooleanAlgebra({"x", "y"}));
    EXPECT_TRUE(renamed.same_structure(b2()));
    EXPECT_FALSE(c2().same_structure(b2()));
    EXPECT_THROW(SubordinationAlgebra(FiniteBooleanAlgebra(1), {0}), dv::InputError);
}

TEST(Tables, LexOrderMatchesRowMajorBitString) {
    // Row-major bit strings compared first-bit-first, unrelated before related.
    auto key = [](const SubordinationAlgebra& v) {
        std::string s;
        const auto& base = v.base();
        for (Element x : base.elements())
            for (Element y : base.elements()) s += v.prec(x, y) ? '1' : '0';
        return s;
    };
    for (std::uint64_t i = 0; i < 64; ++i)
        for (std::uint64_t j = 0; j < 64; ++j) {
            const auto x = oracle::table(2, i * 977 % 65536);
            const auto y = oracle::table(2, j * 1931 % 65536);
            ASSERT_EQ(dv::table_lex_less(x, y), key(x) < key(y));
        }
}

}  // namespace
