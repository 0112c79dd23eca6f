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

#include <random>

#include "dv/duality.hpp"
#include "dv/error.hpp"
#include "dv/s2ic/formula.hpp"
#include "dv/s2ic/search.hpp"
#include "dv/s2ic/semantics.hpp"
#include "dv/topology.hpp"
#include "oracles.hpp"
#include "regression.hpp"

namespace {

using dv::Element;
using dv::FiniteBooleanAlgebra;
using dv::FiniteSpace;
using dv::PointSet;
using dv::SubordinationAlgebra;
using namespace dv::s2ic;

SubordinationAlgebra order(unsigned n) { return SubordinationAlgebra::order(FiniteBooleanAlgebra(n)); }
SubordinationAlgebra c2() { return SubordinationAlgebra::trivial(FiniteBooleanAlgebra(2)); }
FiniteSpace s3() {
    return FiniteSpace({"Fp", "Fq", "F1"}, {PointSet{0}, PointSet{1}, PointSet{2}, PointSet{3}, PointSet{7}});
}

Formula v(const char* n) { return Formula::var(n); }

std::uint32_t oracle_eval(const oracle::Alg& a, const std::map<std::string, std::uint32_t>& val, const Formula& f) {
    switch (f.op) {
        case Connective::variable: return val.at(f.name);
        case Connective::bottom: return 0;
        case Connective::top: return a.top();
        case Connective::negation: return a.neg(oracle_eval(a, val, f.args[0]));
        case Connective::conjunction: return oracle_eval(a, val, f.args[0]) & oracle_eval(a, val, f.args[1]);
        case Connective::disjunction: return oracle_eval(a, val, f.args[0]) | oracle_eval(a, val, f.args[1]);
        case Connective::implication: return a.neg(oracle_eval(a, val, f.args[0])) | oracle_eval(a, val, f.args[1]);
        case Connective::strict:
            return a.prec(oracle_eval(a, val, f.args[0]), oracle_eval(a, val, f.args[1])) ? a.top() : 0;
    }
    return 0;
}

std::vector<SubordinationAlgebra> tables_of(unsigned max_atoms, bool (*accept)(const oracle::Alg&)) {
    std::vector<SubordinationAlgebra> out;
    for (unsigned n = 0; n <= max_atoms; ++n)
        for (std::uint64_t code = 0; code < oracle::table_count(n); ++code) {
            auto t = oracle::table(n, code);
            if (accept(oracle::from(t))) out.push_back(std::move(t));
        }
    return out;
}

std::vector<FiniteSpace> dual_spaces() {
    std::vector<FiniteSpace> out;
    for (unsigned n = 0; n <= 3; ++n) out.push_back(dv::lambda_space(order(n)).space);
    return out;
}

Formula random_formula(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
    const char* names[] = {"p", "q", "r"};
    switch (pick(rng)) {
        case 0: return v(names[rng() % 3]);
        case 1: return rng() % 2 ? Formula::bottom() : Formula::top();
        case 2: return v(names[rng() % 3]);
        case 3: return Formula::neg(random_formula(rng, depth - 1));
        case 4: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 5: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 6: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        default: return Formula::strict(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    }
}

TEST(Formula, ParseExamples) {
    EXPECT_EQ(parse("p => q"), Formula::strict(v("p"), v("q")));
    EXPECT_EQ(parse("~p & q -> r"), Formula::imp(Formula::conj(Formula::neg(v("p")), v("q")), v("r")));
    EXPECT_EQ(parse("p => q => r"), Formula::strict(v("p"), Formula::strict(v("q"), v("r"))));
}

TEST(Formula, PrecedenceAndAssociativity) {
    EXPECT_EQ(parse("p | q & r"), Formula::disj(v("p"), Formula::conj(v("q"), v("r"))));
    EXPECT_EQ(parse("p -> q => r"), Formula::strict(Formula::imp(v("p"), v("q")), v("r")));
    EXPECT_EQ(parse("p -> q -> r"), Formula::imp(v("p"), Formula::imp(v("q"), v("r"))));
    EXPECT_EQ(parse("p & q & r"), Formula::conj(Formula::conj(v("p"), v("q")), v("r")));
    EXPECT_EQ(parse("p | q | r"), Formula::disj(Formula::disj(v("p"), v("q")), v("r")));
    EXPECT_EQ(parse("~~p"), Formula::neg(Formula::neg(v("p"))));
    EXPECT_EQ(parse(" ( 0 => 1 ) "), Formula::strict(Formula::bottom(), Formula::top()));
    EXPECT_EQ(parse("x_1 & y2"), Formula::conj(v("x_1"), v("y2")));
}

TEST(Formula, ParseErrorsCarryLocations) {
    try {
        parse("p &");
        FAIL();
    } catch (const dv::ParseError& e) {
        EXPECT_EQ(e.line(), 1U);
        EXPECT_EQ(e.column(), 4U);
    }
    try {
        parse("p &\n  q # r");
        FAIL();
    } catch (const dv::ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_EQ(e.column(), 5U);
        EXPECT_NE(std::string(e.what()).find("unknown token"), std::string::npos);
    }
    EXPECT_THROW(parse("(p"), dv::ParseError);
    EXPECT_THROW(parse("p q"), dv::ParseError);
    EXPECT_THROW(parse(""), dv::ParseError);
    EXPECT_THROW(parse("P"), dv::ParseError);
    EXPECT_THROW(parse("p = q"), dv::ParseError);
    EXPECT_THROW(parse("p - q"), dv::ParseError);
}

TEST(Formula, PrintingRoundTrips) {
    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Formula f = random_formula(rng, 5);
        ASSERT_EQ(parse(to_string(f)), f) << to_string(f);
    }
    for (const auto& e : regression::load_default()) EXPECT_EQ(parse(to_string(e.formula)), e.formula);
    EXPECT_EQ(to_string(parse("(p & q) & r")), "p & q & r");
    EXPECT_EQ(to_string(parse("p & (q & r)")), "p & (q & r)");
    EXPECT_EQ(variables(parse("r & p | q => p")), (std::vector<std::string>{"p", "q", "r"}));
    EXPECT_EQ(size(parse("~p & q")), 4U);
}

TEST(Semantics, AlgebraicExamples) {
    EXPECT_EQ(eval_algebraic(c2(), {{"p", Element{1}}}, parse("p => p")), Element{0});
    EXPECT_EQ(eval_algebraic(order(2), {{"p", Element{1}}}, parse("p => p")), Element{3});
    for (const auto& t : tables_of(1, [](const oracle::Alg& a) { return !oracle::a1(a); }))
        EXPECT_EQ(eval_algebraic(t, {}, parse("1 => 1")), t.base().top());
    EXPECT_THROW(eval_algebraic(order(2), {}, parse("p")), dv::InputError);
    EXPECT_THROW(eval_algebraic(order(2), {{"p", Element{4}}}, parse("p")), dv::InputError);
    EXPECT_EQ(strict_value(c2(), Element{0}, Element{1}), Element{3});
    EXPECT_EQ(delta(c2(), Element{1}, Element{1}), Element{3});
}

TEST(Semantics, AlgebraicMatchesOracle) {
    const auto entries = regression::load_default();
    for (const auto& t : tables_of(1, oracle::subordination)) {
        const auto o = oracle::from(t);
        for (const auto& e : entries) {
            const auto vars = variables(e.formula);
            if (vars.size() > 3) continue;
            std::size_t total = 1;
            for (std::size_t i = 0; i < vars.size(); ++i) total *= o.size();
            for (std::size_t code = 0; code < total; ++code) {
                AlgebraicValuation val;
                std::map<std::string, std::uint32_t> raw;
                std::size_t c = code;
                for (const auto& name : vars) {
                    raw[name] = static_cast<std::uint32_t>(c % o.size());
                    val[name] = Element{raw[name]};
                    c /= o.size();
                }
                ASSERT_EQ(eval_algebraic(t, val, e.formula).bits(), oracle_eval(o, raw, e.formula));
            }
        }
    }
}

TEST(Semantics, TopologicalExamples) {
    const auto x = s3();
    EXPECT_EQ(eval_topological(x, {{"p", PointSet{1}}}, parse("p => p")), x.full());
    EXPECT_EQ(eval_topological(x, {{"p", PointSet{1}}, {"q", PointSet{2}}}, parse("p => q")), PointSet{});
    EXPECT_EQ(eval_topological(x, {{"q", PointSet{2}}}, parse("0 => q")), x.full());
    EXPECT_EQ(eval_topological(x, {{"p", PointSet{1}}}, parse("p | ~p")), x.full());
    EXPECT_EQ(eval_topological(x, {{"p", PointSet{1}}, {"q", PointSet{2}}}, parse("p | q")), x.full());
    EXPECT_THROW(eval_topological(x, {{"p", PointSet{3}}}, parse("p")), dv::InputError);
    EXPECT_THROW(eval_topological(x, {}, parse("p")), dv::InputError);
}

TEST(Semantics, ValidityExamples) {
    const auto a2 = is_valid_on_space(s3(), parse("(p => q) -> (p -> q)"));
    EXPECT_TRUE(a2.valid);
    EXPECT_EQ(a2.valuations_checked, 16U);
    EXPECT_TRUE(is_valid_on_space(s3(), parse("p | ~p")).valid);
    const auto bad = is_valid_on_space(s3(), parse("p"));
    EXPECT_FALSE(bad.valid);
    ASSERT_TRUE(bad.countervaluation.has_value());
    EXPECT_EQ(bad.countervaluation->at("p"), PointSet{});
    EXPECT_EQ(format_valuation(s3(), *bad.countervaluation), "p={}");
    EXPECT_THROW(is_valid_on_space(dv::discrete_space(2), parse("p")), dv::PreconditionError);
    EXPECT_TRUE(is_valid_on_space(FiniteSpace(), parse("p")).valid);
    const auto alg = is_valid_on_algebra(c2(), parse("(p -> p) -> (p => p)"));
    EXPECT_FALSE(alg.valid);
    EXPECT_EQ(alg.countervaluation->at("p"), Element{1});
}

TEST(Semantics, DualSpacesValidateTheReflectionAxiom) {
    for (const auto& x : dual_spaces()) EXPECT_TRUE(is_valid_on_space(x, parse("(p => q) -> (p -> q)")).valid);
}

TEST(Semantics, ValuesStayRegularOpenOnTheCorpus) {
    std::vector<FiniteSpace> spaces = dual_spaces();
    for (const auto& x : oracle::space_corpus())
        if (x.size() <= 3 && dv::is_dv_space(x).passed()) spaces.push_back(x);
    std::mt19937 rng(11);
    std::vector<Formula> formulas;
    for (const auto& e : regression::load_default()) formulas.push_back(e.formula);
    for (int i = 0; i < 60; ++i) formulas.push_back(random_formula(rng, 4));
    for (const auto& x : spaces) {
        const auto o = oracle::from(x);
        const auto ro = o.ro();
        for (const auto& f : formulas) {
            const auto vars = variables(f);
            if (vars.size() > 3) continue;
            std::size_t total = 1;
            for (std::size_t i = 0; i < vars.size(); ++i) total *= ro.size();
            for (std::size_t code = 0; code < total; ++code) {
                TopologicalValuation val;
                std::size_t c = code;
                for (const auto& name : vars) {
                    val[name] = PointSet{ro[c % ro.size()]};
                    c /= ro.size();
                }
                const PointSet value = eval_topological(x, val, f);
                ASSERT_TRUE(o.regular_open(value.mask())) << to_string(f);
            }
        }
    }
}

TEST(Semantics, StrictImplicationReflectsIntoMaterial) {
    const auto strict = parse("p => q");
    const auto material = parse("p -> q");
    for (const auto& t : tables_of(2, oracle::contact))
        for (Element a : t.base().elements())
            for (Element b : t.base().elements()) {
                const AlgebraicValuation val{{"p", a}, {"q", b}};
                if (eval_algebraic(t, val, strict) == t.base().top())
                    ASSERT_EQ(eval_algebraic(t, val, material), t.base().top());
            }
}

TEST(Semantics, DeltaIsNormalAndAdditive) {
    auto corpus = tables_of(2, oracle::contact);
    for (auto& t : class_tables(3, ModelClass::contact)) corpus.push_back(std::move(t));
    for (const auto& t : corpus) {
        const auto& b = t.base();
        for (Element c : b.elements()) {
            ASSERT_EQ(delta(t, b.bottom(), c), b.bottom());
            for (Element a : b.elements())
                for (Element d : b.elements())
                    ASSERT_EQ(delta(t, b.join(a, d), c), b.join(delta(t, a, c), delta(t, d, c)));
        }
    }
}

TEST(Semantics, AgreementExamples) {
    const auto r = semantics_agreement(order(2), parse("p => p"));
    EXPECT_TRUE(r.verdict.passed());
    EXPECT_EQ(r.valuations_checked, 4U);
    for (const char* f : {"p", "~p", "p => p", "p | ~p", "(p => 0) -> ~p"})
        EXPECT_TRUE(semantics_agreement(order(1), parse(f)).verdict.passed()) << f;
    const auto d = semantics_agreement(order(0), parse("p & ~p"));
    EXPECT_TRUE(d.verdict.passed());
    EXPECT_THROW(semantics_agreement(c2(), parse("p")), dv::PreconditionError);
}

TEST(Semantics, AgreementOnCompingentCorpus) {
    const auto entries = regression::load_default();
    ASSERT_GE(entries.size(), 20U);
    for (unsigned n = 0; n <= 3; ++n)
        for (const auto& t : class_tables(n, ModelClass::compingent))
            for (const auto& e : entries) EXPECT_TRUE(semantics_agreement(t, e.formula).verdict.passed()) << e.text;
}

TEST(Search, ClassTablesMatchBruteForce) {
    const std::array<bool (*)(const oracle::Alg&), 3> predicates{oracle::subordination, oracle::contact,
                                                                 oracle::compingent};
    const std::array<ModelClass, 3> classes{ModelClass::subordination, ModelClass::contact, ModelClass::compingent};
    for (std::size_t k = 0; k < 3; ++k)
        for (unsigned n = 0; n <= 2; ++n) {
            std::vector<SubordinationAlgebra> expected;
            for (std::uint64_t code = 0; code < oracle::table_count(n); ++code) {
                auto t = oracle::table(n, code);
                if (predicates[k](oracle::from(t))) expected.push_back(std::move(t));
            }
            std::sort(expected.begin(), expected.end(), dv::table_lex_less);
            const auto got = class_tables(n, classes[k]);
            ASSERT_EQ(got.size(), expected.size()) << to_string(classes[k]) << " n=" << n;
            for (std::size_t i = 0; i < got.size(); ++i) ASSERT_TRUE(got[i].same_structure(expected[i]));
        }
    EXPECT_EQ(class_tables(3, ModelClass::subordination).size(), 512U);
    EXPECT_EQ(class_tables(3, ModelClass::contact).size(), 8U);
    EXPECT_EQ(class_tables(3, ModelClass::compingent).size(), 1U);
    EXPECT_THROW(parse_model_class("boolean"), dv::InputError);
    EXPECT_EQ(parse_model_class("contact"), ModelClass::contact);
}

TEST(Search, CountermodelExamples) {
    const auto r = countermodel_search(parse("(p -> p) -> (p => p)"), 2, ModelClass::contact);
    ASSERT_TRUE(r.countermodel.has_value());
    EXPECT_TRUE(r.countermodel->algebra.same_structure(c2()));
    EXPECT_EQ(r.countermodel->valuation.at("p"), Element{1});
    EXPECT_EQ(r.countermodel->value, Element{0});
    EXPECT_EQ(r.tables_examined, 3U);
    EXPECT_EQ(eval_algebraic(r.countermodel->algebra, r.countermodel->valuation, parse("(p -> p) -> (p => p)")),
              Element{0});

    const auto none = countermodel_search(parse("(p => q) -> (p -> q)"), 2, ModelClass::contact);
    EXPECT_FALSE(none.countermodel.has_value());
    EXPECT_EQ(none.max_atoms, 2U);
    EXPECT_EQ(none.tables_examined, 4U);
    EXPECT_FALSE(countermodel_search(parse("1"), 3, ModelClass::subordination).countermodel.has_value());
    EXPECT_FALSE(countermodel_search(parse("1"), 3, ModelClass::compingent).countermodel.has_value());
    EXPECT_THROW(countermodel_search(parse("p"), 4, ModelClass::contact), dv::InputError);
}

TEST(Search, ResultDoesNotDependOnWorkers) {
    for (const auto& e : regression::load_default()) {
        if (variables(e.formula).size() > 2) continue;
        const auto one = countermodel_search(e.formula, 3, ModelClass::subordination, 1);
        const auto many = countermodel_search(e.formula, 3, ModelClass::subordination, 4);
        ASSERT_EQ(one.countermodel.has_value(), many.countermodel.has_value()) << e.text;
        EXPECT_EQ(one.tables_examined, many.tables_examined);
        if (one.countermodel) {
            EXPECT_TRUE(one.countermodel->algebra == many.countermodel->algebra);
            EXPECT_EQ(one.countermodel->valuation, many.countermodel->valuation);
        }
    }
}

TEST(Search, RegressionLabelsAgreeWithSearch) {
    const auto entries = regression::load_default();
    ASSERT_GE(entries.size(), 20U);
    std::size_t theorems = 0;
    for (const auto& e : entries) {
        const auto r = countermodel_search(e.formula, 3, ModelClass::contact);
        EXPECT_EQ(!r.countermodel.has_value(), e.theorem) << e.text;
        if (r.countermodel)
            EXPECT_NE(eval_algebraic(r.countermodel->algebra, r.countermodel->valuation, e.formula),
                      r.countermodel->algebra.base().top());
        if (e.theorem) {
            ++theorems;
            for (const auto& x : dual_spaces()) EXPECT_TRUE(is_valid_on_space(x, e.formula).valid) << e.text;
        }
    }
    EXPECT_GE(theorems, 10U);
    EXPECT_GE(entries.size() - theorems, 5U);
}

}  // namespace
