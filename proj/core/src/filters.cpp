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

#include "dv/filters.hpp"

#include <cassert>

#include "dv/error.hpp"

namespace dv {

ElementSet Filter::members(const FiniteBooleanAlgebra& alg) const {
    ElementSet out;
    for (Element a : alg.elements()) {
        if (contains(a)) out.insert(a);
    }
    return out;
}

ElementSet Ideal::members(const FiniteBooleanAlgebra& alg) const {
    ElementSet out;
    for (Element a : alg.elements()) {
        if (contains(a)) out.insert(a);
    }
    return out;
}

std::optional<Filter> as_filter(const FiniteBooleanAlgebra& alg, ElementSet set) {
    if (set.empty() || set.contains(alg.bottom())) return std::nullopt;
    const Filter candidate(alg.meet_all(set));
    if (candidate.members(alg) != set) return std::nullopt;
    return candidate;
}

ElementSet round_part(const SubordinationAlgebra& alg, Filter f) {
    const auto& base = alg.base();
    base.check(f.generator());
    ElementSet out;
    for (Element a : base.elements()) {
        if (!f.contains(a)) continue;
        for (Element b : base.elements()) {
            if (f.contains(b) && alg.prec(b, a)) {
                out.insert(a);
                break;
            }
        }
    }
    return out;
}

bool is_concordant(const SubordinationAlgebra& alg, Filter f) {
    return f.proper() && round_part(alg, f) == f.members(alg.base());
}

std::vector<Filter> concordant_filters(const SubordinationAlgebra& alg) {
    std::vector<Filter> out;
    for (Element g : alg.base().elements()) {
        const Filter f(g);
        if (is_concordant(alg, f)) out.push_back(f);
    }
    return out;
}

std::vector<Filter> ends(const SubordinationAlgebra& alg) {
    const auto all = concordant_filters(alg);
    std::vector<Filter> out;
    for (Filter f : all) {
        bool maximal = true;
        for (Filter g : all) {
            if (g != f && f.subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

bool is_round(const SubordinationAlgebra& alg, Ideal ideal) {
    const auto& base = alg.base();
    base.check(ideal.generator());
    for (Element a : base.elements()) {
        if (!ideal.contains(a)) continue;
        bool found = false;
        for (Element b : base.elements()) {
            if (ideal.contains(b) && alg.prec(a, b)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Ideal> round_ideals(const SubordinationAlgebra& alg) {
    std::vector<Ideal> out;
    for (Element g : alg.base().elements()) {
        const Ideal i(g);
        if (is_round(alg, i)) out.push_back(i);
    }
    return out;
}

Filter dual_filter(const FiniteBooleanAlgebra& alg, Ideal ideal) {
    alg.check(ideal.generator());
    if (!ideal.proper(alg)) throw InputError("the improper ideal has no dual filter");
    return Filter(alg.complement(ideal.generator()));
}

ElementSet filter_from_element(const SubordinationAlgebra& alg, Element a) {
    alg.base().check(a);
    if (a == alg.base().bottom()) throw InputError("filter_from_element requires a nonzero element");
    return alg.above(a);
}

ElementSet meet_set(const FiniteBooleanAlgebra& alg, Filter f, Filter g) {
    ElementSet out;
    for (Element c : alg.elements()) {
        if (!f.contains(c)) continue;
        for (Element d : alg.elements()) {
            if (g.contains(d)) out.insert(alg.meet(c, d));
        }
    }
    return out;
}

Filter concordant_meet(const SubordinationAlgebra& alg, Filter f, Filter g) {
    const auto& base = alg.base();
    if (!is_concordant(alg, f) || !is_concordant(alg, g)) {
        throw PreconditionError("concordant_meet requires concordant filters");
    }
    const Element m = base.meet(f.generator(), g.generator());
    if (m == base.bottom()) {
        throw PreconditionError("filters " + base.format(f.generator()) + " and " + base.format(g.generator()) +
                                " are incompatible (generators meet to 0)");
    }
    const Filter h(m);
    assert(meet_set(base, f, g) == h.members(base));
    return h;
}

RegExtension reg_extension(const SubordinationAlgebra& alg, Filter f, Element a) {
    const auto& base = alg.base();
    base.check(a);
    if (!check_axioms(alg).compingent()) throw PreconditionError("reg_extension requires a compingent algebra");
    if (!is_concordant(alg, f)) throw PreconditionError("reg_extension requires a concordant filter");
    if (f.contains(a)) {
        throw PreconditionError("element " + base.format(a) + " already belongs to the filter");
    }

    const Element not_a = base.complement(a);
    ElementSet g_set;
    for (Element c : base.elements()) {
        if (!f.contains(c)) continue;
        for (Element d : base.elements()) {
            if (alg.prec(not_a, d)) g_set.insert(base.meet(c, d));
        }
    }

    RegExtension out;
    const auto g = as_filter(base, g_set);
    if (!g) {
        out.extension = Filter(base.meet_all(g_set));
        return out;
    }
    out.extension = *g;
    out.concordant = is_concordant(alg, *g);
    out.extends_original = f.subset_of(*g);
    out.excludes_element = true;
    for (Filter h : concordant_filters(alg)) {
        if (g->subset_of(h) && h.contains(a)) {
            out.excludes_element = false;
            break;
        }
    }
    return out;
}

}  // namespace dv
