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

#include "dv/subordination.hpp"

#include "dv/error.hpp"

namespace dv {

SubordinationAlgebra::SubordinationAlgebra() : base_(0), rows_{1} {}

SubordinationAlgebra::SubordinationAlgebra(FiniteBooleanAlgebra base, std::vector<std::uint64_t> rows)
    : base_(std::move(base)), rows_(std::move(rows)) {
    if (rows_.size() != base_.size()) {
        throw InputError("relation table has " + std::to_string(rows_.size()) + " rows, expected " +
                         std::to_string(base_.size()));
    }
    const std::uint64_t allowed = base_.all().mask();
    for (std::uint64_t r : rows_) {
        if ((r & ~allowed) != 0) throw InputError("relation table row refers to elements outside the algebra");
    }
}

SubordinationAlgebra SubordinationAlgebra::order(FiniteBooleanAlgebra base) {
    const auto& b = base;
    return from_predicate(base, [&b](Element x, Element y) { return b.leq(x, y); });
}

SubordinationAlgebra SubordinationAlgebra::trivial(FiniteBooleanAlgebra base) {
    const Element top = base.top();
    return from_predicate(std::move(base), [top](Element x, Element y) { return x.bits() == 0 || y == top; });
}

SubordinationAlgebra SubordinationAlgebra::from_predicate(FiniteBooleanAlgebra base,
                                                          const std::function<bool(Element, Element)>& related) {
    std::vector<std::uint64_t> rows(base.size(), 0);
    for (Element a : base.elements()) {
        for (Element b : base.elements()) {
            if (related(a, b)) rows[a.index()] |= std::uint64_t{1} << b.index();
        }
    }
    return SubordinationAlgebra(std::move(base), std::move(rows));
}

bool SubordinationAlgebra::prec(Element a, Element b) const {
    base_.check(a);
    base_.check(b);
    return (rows_[a.index()] >> b.index()) & 1U;
}

ElementSet SubordinationAlgebra::above(Element a) const {
    base_.check(a);
    return ElementSet{rows_[a.index()]};
}

ElementSet SubordinationAlgebra::below(Element b) const {
    base_.check(b);
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        if ((rows_[a] >> b.index()) & 1U) mask |= std::uint64_t{1} << a;
    }
    return ElementSet{mask};
}

bool SubordinationAlgebra::same_structure(const SubordinationAlgebra& other) const {
    return base_.atom_count() == other.base_.atom_count() && rows_ == other.rows_;
}

bool table_lex_less(const SubordinationAlgebra& x, const SubordinationAlgebra& y) {
    if (x.base().atom_count() != y.base().atom_count()) return x.base().atom_count() < y.base().atom_count();
    for (std::size_t a = 0; a < x.rows().size(); ++a) {
        const std::uint64_t diff = x.rows()[a] ^ y.rows()[a];
        if (diff != 0) {
            // Lowest differing column decides; the table without the pair is smaller.
            const std::uint64_t bit = diff & (~diff + 1);
            return (x.rows()[a] & bit) == 0;
        }
    }
    return false;
}

std::string to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::A1: return "A1";
        case Axiom::A2: return "A2";
        case Axiom::A3: return "A3";
        case Axiom::A4: return "A4";
        case Axiom::A5: return "A5";
        case Axiom::A6: return "A6";
        case Axiom::A7: return "A7";
        case Axiom::zero_dimensional: return "zero-dimensional";
    }
    return "?";
}

bool AxiomReport::contact() const {
    return holds(Axiom::A1) && holds(Axiom::A2) && holds(Axiom::A3) && holds(Axiom::A4) && holds(Axiom::A5);
}

bool AxiomReport::compingent() const { return contact() && holds(Axiom::A6) && holds(Axiom::A7); }

namespace {

// All quantifiers below run over elements in ascending encoding, so the first
// counterexample found is the lexicographically least one.
class AxiomChecker {
public:
    explicit AxiomChecker(const SubordinationAlgebra& alg) : alg_(alg), n_(alg.base().size()) {}

    bool rel(std::size_t a, std::size_t b) const { return (alg_.rows()[a] >> b) & 1U; }
    bool leq(std::size_t a, std::size_t b) const { return (a & ~b) == 0; }
    std::size_t neg(std::size_t a) const { return (n_ - 1) & ~a; }
    Element el(std::size_t a) const { return Element{static_cast<std::uint32_t>(a)}; }

    AxiomCheck a1() const {
        const std::size_t top = n_ - 1;
        if (rel(top, top)) return {Axiom::A1, true, {}};
        return {Axiom::A1, false, {el(top), el(top)}};
    }

    AxiomCheck a2() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (rel(a, b) && !leq(a, b)) return {Axiom::A2, false, {el(a), el(b)}};
        return {Axiom::A2, true, {}};
    }

    AxiomCheck a3() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                if (!leq(a, b)) continue;
                for (std::size_t c = 0; c < n_; ++c) {
                    if (!rel(b, c)) continue;
                    for (std::size_t d = 0; d < n_; ++d)
                        if (leq(c, d) && !rel(a, d)) return {Axiom::A3, false, {el(a), el(b), el(c), el(d)}};
                }
            }
        return {Axiom::A3, true, {}};
    }

    AxiomCheck a4() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                if (!rel(a, b)) continue;
                for (std::size_t c = 0; c < n_; ++c)
                    if (rel(a, c) && !rel(a, b & c)) return {Axiom::A4, false, {el(a), el(b), el(c)}};
            }
        return {Axiom::A4, true, {}};
    }

    AxiomCheck a5() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (rel(a, b) && !rel(neg(b), neg(a))) return {Axiom::A5, false, {el(a), el(b)}};
        return {Axiom::A5, true, {}};
    }

    AxiomCheck a6() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t c = 0; c < n_; ++c) {
                if (!rel(a, c)) continue;
                bool found = false;
                for (std::size_t b = 0; b < n_ && !found; ++b) found = rel(a, b) && rel(b, c);
                if (!found) return {Axiom::A6, false, {el(a), el(c)}};
            }
        return {Axiom::A6, true, {}};
    }

    AxiomCheck a7() const {
        for (std::size_t a = 1; a < n_; ++a) {
            bool found = false;
            for (std::size_t b = 1; b < n_ && !found; ++b) found = rel(b, a);
            if (!found) return {Axiom::A7, false, {el(a)}};
        }
        return {Axiom::A7, true, {}};
    }

    AxiomCheck zero_dimensional() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                if (!rel(a, b)) continue;
                bool found = false;
                for (std::size_t c = 0; c < n_ && !found; ++c) found = rel(a, c) && rel(c, c) && rel(c, b);
                if (!found) return {Axiom::zero_dimensional, false, {el(a), el(b)}};
            }
        return {Axiom::zero_dimensional, true, {}};
    }

    bool subordination() const {
        const std::size_t top = n_ - 1;
        if (!rel(0, 0) || !rel(top, top)) return false;
        if (!a3().holds || !a4().holds) return false;
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t a = 0; a < n_; ++a) {
                if (!rel(a, c)) continue;
                for (std::size_t b = 0; b < n_; ++b)
                    if (rel(b, c) && !rel(a | b, c)) return false;
            }
        return true;
    }

private:
    const SubordinationAlgebra& alg_;
    std::size_t n_;
};

}  // namespace

AxiomReport check_axioms(const SubordinationAlgebra& alg) {
    const AxiomChecker chk(alg);
    AxiomReport report;
    report.checks = {chk.a1(), chk.a2(), chk.a3(), chk.a4(), chk.a5(), chk.a6(), chk.a7(), chk.zero_dimensional()};
    return report;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::none: return "none";
        case Classification::subordination: return "subordination";
        case Classification::contact: return "contact";
        case Classification::compingent: return "compingent";
        case Classification::de_vries: return "deVries";
        case Classification::zero_dimensional_de_vries: return "zero-dimensional deVries";
    }
    return "?";
}

Classification classify(const AxiomReport& report, const SubordinationAlgebra& alg) {
    if (report.compingent()) {
        // Finite Boolean algebras are complete.
        return report.holds(Axiom::zero_dimensional) ? Classification::zero_dimensional_de_vries
                                                     : Classification::de_vries;
    }
    if (report.contact()) return Classification::contact;
    if (AxiomChecker(alg).subordination()) return Classification::subordination;
    return Classification::none;
}

Classification classify(const SubordinationAlgebra& alg) { return classify(check_axioms(alg), alg); }

}  // namespace dv
