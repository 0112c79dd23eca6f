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

#include "dv/duality.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dv/error.hpp"

namespace dv {

std::optional<std::size_t> DualSpace::point_of(Filter f) const {
    auto it = std::lower_bound(points.begin(), points.end(), f);
    if (it == points.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
}

DualSpace lambda_space(const SubordinationAlgebra& v) {
    const auto& base = v.base();
    DualSpace out;
    out.points = concordant_filters(v);

    std::vector<std::string> names;
    std::set<std::string> seen;
    bool clash = false;
    for (Filter f : out.points) {
        names.push_back("F" + base.compact_name(f.generator()));
        clash = clash || !seen.insert(names.back()).second;
    }
    if (clash) {
        for (std::size_t i = 0; i < names.size(); ++i) names[i] = "F" + std::to_string(i);
    }

    out.hat.resize(base.size());
    for (Element a : base.elements()) {
        PointSet h;
        for (std::size_t i = 0; i < out.points.size(); ++i) {
            if (out.points[i].contains(a)) h.insert(i);
        }
        out.hat[a.index()] = h;
    }
    out.space = generate_topology(std::move(names), out.hat);
    return out;
}

SubordinationAlgebra phi_algebra(const FiniteSpace& x) {
    const RegularOpenAlgebra ro(x);
    return ro_subordination_algebra(x, ro);
}

Representation verify_representation(const SubordinationAlgebra& v) {
    if (!check_axioms(v).compingent()) throw PreconditionError("verify_representation requires a compingent algebra");
    const auto& base = v.base();
    Representation rep{{}, lambda_space(v)};
    const auto& dual = rep.dual;
    const FiniteSpace& s = dual.space;
    auto hat = [&](Element a) { return dual.hat_of(a); };
    auto pair = [&](Element a, Element b) { return "a=" + base.format(a) + ", b=" + base.format(b); };

    {
        std::vector<PointSet> images(dual.hat);
        std::sort(images.begin(), images.end());
        const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
        const auto ro = open_algebras(s).regular_open;
        std::string witness;
        if (!injective) witness = "two elements share the same â";
        else if (images != ro) witness = "{â} differs from RO(S_V)";
        rep.verdict.add("hat-bijection", witness.empty(), witness);
    }
    rep.verdict.add("zero-one", hat(base.bottom()).empty() && hat(base.top()) == s.full(),
                    "0̂ ≠ ∅ or 1̂ ≠ S_V");

    std::string meet_w, leq_w, prox_w;
    for (Element a : base.elements()) {
        for (Element b : base.elements()) {
            if (meet_w.empty() && (hat(a) & hat(b)) != hat(base.meet(a, b))) meet_w = pair(a, b);
            if (leq_w.empty() && hat(a).subset_of(hat(b)) != base.leq(a, b)) leq_w = pair(a, b);
            if (prox_w.empty() && v.prec(a, b) != ll_relation(s, hat(a), hat(b))) prox_w = pair(a, b);
        }
    }
    rep.verdict.add("basic-i", meet_w.empty(), meet_w);

    {
        std::string witness;
        if (!is_basis(s, dual.hat)) witness = "{â} is not a basis";
        for (std::size_t i = 0; i < dual.points.size() && witness.empty(); ++i) {
            for (std::size_t j = 0; j < dual.points.size(); ++j) {
                if (s.specialization_leq(i, j) != dual.points[i].subset_of(dual.points[j])) {
                    witness = "specialization differs from inclusion at " + s.name(i) + ", " + s.name(j);
                    break;
                }
            }
        }
        rep.verdict.add("basic-ii", witness.empty(), witness);
    }
    rep.verdict.add("basic-iii", leq_w.empty(), leq_w);

    std::string perp_w, oro_w;
    for (Element a : base.elements()) {
        if (perp_w.empty() && s.perp(hat(a)) != hat(base.complement(a))) perp_w = "a=" + base.format(a);
        if (oro_w.empty() && (s.up_interior(s.down(hat(a))) != hat(a) || s.perp(s.perp(hat(a))) != hat(a))) {
            oro_w = "a=" + base.format(a);
        }
    }
    rep.verdict.add("basic-iv", perp_w.empty(), perp_w);
    rep.verdict.add("basic-v", oro_w.empty(), oro_w);
    rep.verdict.add("prox", prox_w.empty(), prox_w);
    return rep;
}

SpaceRoundtrip verify_space_roundtrip(const FiniteSpace& x) {
    if (!is_dv_space(x).passed()) throw PreconditionError("verify_space_roundtrip requires a dV-space");
    const RegularOpenAlgebra ro(x);
    const SubordinationAlgebra alg = ro_subordination_algebra(x, ro);
    SpaceRoundtrip out{{}, {}, lambda_space(alg)};
    const auto& dual = out.dual;

    std::string witness;
    for (std::size_t p = 0; p < x.size(); ++p) {
        const auto f = as_filter(alg.base(), ro.neighbourhood_filter(p));
        const auto index = f ? dual.point_of(*f) : std::nullopt;
        if (!index) {
            if (witness.empty()) witness = "RO(" + x.name(p) + ") is not a concordant filter";
            out.map.push_back(0);
            continue;
        }
        out.map.push_back(*index);
    }
    out.verdict.add("well-defined", witness.empty(), witness);
    if (!witness.empty()) return out;

    {
        std::vector<std::size_t> sorted(out.map);
        std::sort(sorted.begin(), sorted.end());
        const bool bijective = sorted.size() == dual.points.size() &&
                               std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        out.verdict.add("bijection", bijective, "x ↦ RO(x) is not a bijection onto the dual");
    }
    out.verdict.add("homeomorphism", is_homeomorphism(x, dual.space, out.map),
                    "x ↦ RO(x) is not a homeomorphism");

    std::string hat_w;
    for (PointSet u : ro.members()) {
        const PointSet image = dual.hat_of(ro.encode(u));
        for (std::size_t p = 0; p < x.size(); ++p) {
            if (u.contains(p) != image.contains(out.map[p])) {
                hat_w = "U=" + x.format(u) + ", x=" + x.name(p);
                break;
            }
        }
        if (!hat_w.empty()) break;
    }
    out.verdict.add("hat-correspondence", hat_w.empty(), hat_w);
    return out;
}

}  // namespace dv
