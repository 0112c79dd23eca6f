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

#include "dv/s2ic/semantics.hpp"

#include <functional>
#include <vector>

#include "dv/duality.hpp"
#include "dv/error.hpp"
#include "dv/topology.hpp"

namespace dv::s2ic {

Element strict_value(const SubordinationAlgebra& alg, Element a, Element b) {
    return alg.prec(a, b) ? alg.base().top() : alg.base().bottom();
}

Element delta(const SubordinationAlgebra& alg, Element a, Element b) {
    const auto& base = alg.base();
    return base.complement(strict_value(alg, a, base.complement(b)));
}

Element eval_algebraic(const SubordinationAlgebra& alg, const AlgebraicValuation& v, const Formula& f) {
    const auto& base = alg.base();
    auto sub = [&](std::size_t i) { return eval_algebraic(alg, v, f.args[i]); };
    switch (f.op) {
        case Connective::variable: {
            auto it = v.find(f.name);
            if (it == v.end()) throw InputError("unbound variable '" + f.name + "'");
            base.check(it->second);
            return it->second;
        }
        case Connective::bottom:
            return base.bottom();
        case Connective::top:
            return base.top();
        case Connective::negation:
            return base.complement(sub(0));
        case Connective::conjunction:
            return base.meet(sub(0), sub(1));
        case Connective::disjunction:
            return base.join(sub(0), sub(1));
        case Connective::implication:
            return base.join(base.complement(sub(0)), sub(1));
        case Connective::strict:
            return strict_value(alg, sub(0), sub(1));
    }
    throw Error("unknown connective");
}

namespace {

PointSet eval_space(const FiniteSpace& x, const TopologicalValuation& v, const Formula& f) {
    auto sub = [&](std::size_t i) { return eval_space(x, v, f.args[i]); };
    auto reg = [&](PointSet u) { return x.perp(x.perp(u)); };
    PointSet out;
    switch (f.op) {
        case Connective::variable: {
            auto it = v.find(f.name);
            if (it == v.end()) throw InputError("unbound variable '" + f.name + "'");
            if (!it->second.subset_of(x.full()) || !is_regular_open(x, it->second)) {
                throw InputError("value of '" + f.name + "' is not regular open: " + x.format(it->second));
            }
            return it->second;
        }
        case Connective::bottom:
            return PointSet{};
        case Connective::top:
            return x.full();
        case Connective::negation:
            out = x.perp(sub(0));
            break;
        case Connective::conjunction:
            out = sub(0) & sub(1);
            break;
        case Connective::disjunction:
            out = reg(sub(0) | sub(1));
            break;
        case Connective::implication:
            out = reg(x.perp(sub(0)) | sub(1));
            break;
        case Connective::strict: {
            const PointSet a = sub(0);
            const PointSet b = sub(1);
            out = x.closure(a).subset_of(x.down(b)) ? x.full() : PointSet{};
            break;
        }
    }
    if (!is_regular_open(x, out)) throw Error("value of '" + to_string(f) + "' left RO(X)");
    return out;
}

// Calls `visit` on every assignment of `values` to `names`, first name most
// significant; stops early when `visit` returns false.
template <typename T>
std::size_t for_each_valuation(const std::vector<std::string>& names, const std::vector<T>& values,
                               const std::function<bool(const std::map<std::string, T>&)>& visit) {
    std::vector<std::size_t> digit(names.size(), 0);
    std::map<std::string, T> v;
    std::size_t count = 0;
    if (values.empty() && !names.empty()) return 0;
    while (true) {
        for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = values[digit[i]];
        ++count;
        if (!visit(v)) return count;
        std::size_t i = names.size();
        while (i > 0) {
            --i;
            if (++digit[i] < values.size()) break;
            digit[i] = 0;
            if (i == 0) return count;
        }
        if (names.empty()) return count;
    }
}

}  // namespace

PointSet eval_topological(const FiniteSpace& x, const TopologicalValuation& v, const Formula& f) {
    return eval_space(x, v, f);
}

ValidityResult is_valid_on_space(const FiniteSpace& x, const Formula& f) {
    if (!is_dv_space(x).passed()) throw PreconditionError("validity is defined over dV-spaces");
    const std::vector<PointSet> ro = open_algebras(x).regular_open;
    ValidityResult out;
    out.valuations_checked = for_each_valuation<PointSet>(variables(f), ro, [&](const TopologicalValuation& v) {
        const PointSet value = eval_space(x, v, f);
        if (value == x.full()) return true;
        out.valid = false;
        out.countervaluation = v;
        out.counter_value = value;
        return false;
    });
    return out;
}

AlgebraicValidity is_valid_on_algebra(const SubordinationAlgebra& alg, const Formula& f) {
    AlgebraicValidity out;
    out.valuations_checked =
        for_each_valuation<Element>(variables(f), alg.base().elements(), [&](const AlgebraicValuation& v) {
            const Element value = eval_algebraic(alg, v, f);
            if (value == alg.base().top()) return true;
            out.valid = false;
            out.countervaluation = v;
            out.counter_value = value;
            return false;
        });
    return out;
}

Agreement semantics_agreement(const SubordinationAlgebra& v, const Formula& f) {
    if (!check_axioms(v).compingent()) throw PreconditionError("semantics_agreement requires a compingent algebra");
    const DualSpace dual = lambda_space(v);
    const auto& base = v.base();
    Agreement out;
    std::string agree_w, transport_w;
    out.valuations_checked = for_each_valuation<Element>(variables(f), base.elements(), [&](const AlgebraicValuation& a) {
        TopologicalValuation t;
        for (const auto& [name, e] : a) t[name] = dual.hat_of(e);
        const Element alg_value = eval_algebraic(v, a, f);
        const PointSet top_value = eval_space(dual.space, t, f);
        if (agree_w.empty() && (alg_value == base.top()) != (top_value == dual.space.full())) {
            agree_w = format_valuation(base, a);
        }
        if (transport_w.empty() && top_value != dual.hat_of(alg_value)) transport_w = format_valuation(base, a);
        return true;
    });
    out.verdict.add("agreement", agree_w.empty(), agree_w);
    out.verdict.add("transport", transport_w.empty(), transport_w);
    return out;
}

std::string format_valuation(const FiniteBooleanAlgebra& alg, const AlgebraicValuation& v) {
    std::string out;
    for (const auto& [name, e] : v) {
        if (!out.empty()) out += ", ";
        out += name + "=" + alg.compact_name(e);
    }
    return out;
}

std::string format_valuation(const FiniteSpace& x, const TopologicalValuation& v) {
    std::string out;
    for (const auto& [name, u] : v) {
        if (!out.empty()) out += ", ";
        out += name + "=" + x.format(u);
    }
    return out;
}

}  // namespace dv::s2ic
