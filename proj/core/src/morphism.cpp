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

#include "dv/morphism.hpp"

#include "dv/duality.hpp"
#include "dv/error.hpp"
#include "dv/filters.hpp"
#include "dv/topology.hpp"

namespace dv {

PointSet PointMap::preimage(PointSet v) const {
    PointSet out;
    for (std::size_t x = 0; x < image.size(); ++x) {
        if (v.contains(image[x])) out.insert(x);
    }
    return out;
}

void validate(const MorphismTable& h) {
    if (h.image.size() != h.source.base().size()) {
        throw InputError("morphism table has " + std::to_string(h.image.size()) + " entries for " +
                         std::to_string(h.source.base().size()) + " source elements");
    }
    for (Element b : h.image) h.target.base().check(b);
}

void validate(const PointMap& f) {
    if (f.image.size() != f.source.size()) {
        throw InputError("point map has " + std::to_string(f.image.size()) + " entries for " +
                         std::to_string(f.source.size()) + " source points");
    }
    for (std::size_t y : f.image) {
        if (y >= f.target.size()) throw InputError("point map leaves the target space");
    }
}

MorphismTable identity_morphism(const SubordinationAlgebra& v) { return {v, v, v.base().elements()}; }

PointMap identity_map(const FiniteSpace& x) {
    std::vector<std::size_t> image(x.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
    return {x, x, std::move(image)};
}

Verdict check_devries_morphism(const MorphismTable& h) {
    validate(h);
    if (!check_axioms(h.source).compingent() || !check_axioms(h.target).compingent()) {
        throw PreconditionError("de Vries morphisms are checked between compingent algebras");
    }
    const auto& b1 = h.source.base();
    const auto& b2 = h.target.base();
    Verdict v;
    v.add("V1", h(b1.bottom()) == b2.bottom(), "h(0)=" + b2.format(h(b1.bottom())));

    std::string v2, v3, leq, prec;
    for (Element a : b1.elements()) {
        for (Element b : b1.elements()) {
            const std::string where = "a=" + b1.format(a) + ", b=" + b1.format(b);
            if (v2.empty() && h(b1.meet(a, b)) != b2.meet(h(a), h(b))) v2 = where;
            if (h.source.prec(a, b)) {
                if (v3.empty() && !h.target.prec(b2.complement(h(b1.complement(a))), h(b))) v3 = where;
                if (prec.empty() && !h.target.prec(h(a), h(b))) prec = where;
            }
            if (leq.empty() && b1.leq(a, b) && !b2.leq(h(a), h(b))) leq = where;
        }
    }
    v.add("V2", v2.empty(), v2);
    v.add("V3", v3.empty(), v3);

    std::string v4;
    for (Element a : b1.elements()) {
        Element join = b2.bottom();
        for (Element b : h.source.below(a).elements()) join = b2.join(join, h(b));
        if (join != h(a)) {
            v4 = "a=" + b1.format(a);
            break;
        }
    }
    v.add("V4", v4.empty(), v4);
    v.add("preserves-leq", leq.empty(), leq);
    v.add("preserves-prec", prec.empty(), prec);
    return v;
}

MorphismTable star_compose(const MorphismTable& k, const MorphismTable& h) {
    if (!h.target.same_structure(k.source)) throw InputError("⋆-composition: target of h is not the source of k");
    if (!check_devries_morphism(h).passed() || !check_devries_morphism(k).passed()) {
        throw PreconditionError("⋆-composition requires de Vries morphisms");
    }
    const auto& b1 = h.source.base();
    const auto& b3 = k.target.base();
    MorphismTable out{h.source, k.target, {}};
    out.image.reserve(b1.size());
    for (Element a : b1.elements()) {
        Element join = b3.bottom();
        for (Element b : h.source.below(a).elements()) join = b3.join(join, k(h(b)));
        out.image.push_back(join);
    }
    return out;
}

PointMap compose(const PointMap& g, const PointMap& f) {
    validate(f);
    validate(g);
    if (!(f.target == g.source)) throw InputError("composition: target of f is not the source of g");
    PointMap out{f.source, g.target, {}};
    for (std::size_t y : f.image) out.image.push_back(g(y));
    return out;
}

Verdict check_dv_map(const PointMap& f) {
    validate(f);
    if (!is_dv_space(f.source).passed() || !is_dv_space(f.target).passed()) {
        throw PreconditionError("dV-maps are checked between dV-spaces");
    }
    const FiniteSpace& x = f.source;
    const FiniteSpace& y = f.target;
    Verdict v;
    std::string cont;
    for (PointSet u : y.opens()) {
        if (!x.is_open(f.preimage(u))) {
            cont = "preimage of open " + y.format(u) + " is " + x.format(f.preimage(u));
            break;
        }
    }
    v.add("continuous", cont.empty(), cont);

    std::string dense;
    for (std::size_t p = 0; p < x.size() && dense.empty(); ++p) {
        for (std::size_t q = 0; q < y.size(); ++q) {
            if (!y.specialization_leq(f(p), q)) continue;
            bool found = false;
            for (std::size_t r = 0; r < x.size() && !found; ++r) {
                found = x.specialization_leq(p, r) && y.specialization_leq(q, f(r));
            }
            if (!found) {
                dense = "x=" + x.name(p) + ", y=" + y.name(q) + ": no x' ≥ x with y ≤ f(x')";
                break;
            }
        }
    }
    v.add("weakly-dense", dense.empty(), dense);
    return v;
}

MorphismTable phi_map(const PointMap& f) {
    if (!check_dv_map(f).passed()) throw PreconditionError("Φ is applied to dV-maps only");
    const RegularOpenAlgebra ro_x(f.source);
    const RegularOpenAlgebra ro_y(f.target);
    MorphismTable out{ro_subordination_algebra(f.target, ro_y), ro_subordination_algebra(f.source, ro_x), {}};
    for (Element e : ro_y.algebra().elements()) {
        const PointSet pre = f.preimage(ro_y.decode(e));
        out.image.push_back(ro_x.encode(f.source.perp(f.source.perp(pre))));
    }
    return out;
}

namespace {

PointMap lambda_map_between(const MorphismTable& h, const DualSpace& d1, const DualSpace& d2) {
    const auto& b1 = h.source.base();
    PointMap out{d2.space, d1.space, {}};
    for (Filter f : d2.points) {
        ElementSet pre;
        for (Element a : b1.elements()) {
            if (f.contains(h(a))) pre.insert(a);
        }
        const ElementSet round = round_part(h.source, Filter(b1.meet_all(pre)));
        const auto g = as_filter(b1, round);
        const auto index = g ? d1.point_of(*g) : std::nullopt;
        if (!index) throw Error("Λ(h) sends " + d2.space.name(out.image.size()) + " outside the dual space");
        out.image.push_back(*index);
    }
    return out;
}

}  // namespace

PointMap lambda_map(const MorphismTable& h) {
    if (!check_devries_morphism(h).passed()) throw PreconditionError("Λ is applied to de Vries morphisms only");
    return lambda_map_between(h, lambda_space(h.source), lambda_space(h.target));
}

Verdict check_lambda_map(const MorphismTable& h) {
    if (!check_devries_morphism(h).passed()) throw PreconditionError("Λ is applied to de Vries morphisms only");
    const DualSpace d1 = lambda_space(h.source);
    const DualSpace d2 = lambda_space(h.target);
    const PointMap l = lambda_map_between(h, d1, d2);
    Verdict v = check_dv_map(l);
    std::string witness;
    for (Element a : h.source.base().elements()) {
        PointSet joined;
        for (Element c : h.source.below(a).elements()) joined |= d2.hat_of(h(c));
        if (l.preimage(d1.hat_of(a)) != joined) {
            witness = "a=" + h.source.base().format(a);
            break;
        }
    }
    v.add("continuity-identity", witness.empty(), witness);
    return v;
}

Verdict check_phi_map(const PointMap& f) { return check_devries_morphism(phi_map(f)); }

Verdict verify_duality_roundtrip(const RoundtripInputs& in) {
    Verdict v;
    if (in.algebra) v.merge(verify_representation(*in.algebra).verdict, "obj1");
    if (in.space) v.merge(verify_space_roundtrip(*in.space).verdict, "obj2");

    if (in.morphism) {
        const MorphismTable& h = *in.morphism;
        const DualSpace d1 = lambda_space(h.source);
        const DualSpace d2 = lambda_space(h.target);
        const MorphismTable back = phi_map(lambda_map(h));
        const RegularOpenAlgebra ro1(d1.space);
        const RegularOpenAlgebra ro2(d2.space);
        std::string witness;
        for (Element a : h.source.base().elements()) {
            if (ro2.decode(back(ro1.encode(d1.hat_of(a)))) != d2.hat_of(h(a))) {
                witness = "a=" + h.source.base().format(a);
                break;
            }
        }
        v.add("mainthm-i", witness.empty(), witness);
        v.add("lambda-identity", lambda_map(identity_morphism(h.source)) == identity_map(d1.space),
              "Λ(id) is not the identity");
    }

    if (in.map) {
        const PointMap& f = *in.map;
        const MorphismTable phi = phi_map(f);
        const PointMap back = lambda_map(phi);
        const DualSpace dx = lambda_space(phi.target);
        const DualSpace dy = lambda_space(phi.source);
        const RegularOpenAlgebra ro_x(f.source);
        const RegularOpenAlgebra ro_y(f.target);
        std::string witness;
        for (std::size_t p = 0; p < f.source.size(); ++p) {
            const auto fx = as_filter(ro_x.algebra(), ro_x.neighbourhood_filter(p));
            const auto fy = as_filter(ro_y.algebra(), ro_y.neighbourhood_filter(f(p)));
            const auto ix = fx ? dx.point_of(*fx) : std::nullopt;
            if (!ix || !fy || dy.points[back(*ix)] != *fy) {
                witness = "x=" + f.source.name(p);
                break;
            }
        }
        v.add("mainthm-ii", witness.empty(), witness);
        v.add("phi-identity", phi_map(identity_map(f.source)) == identity_morphism(phi.target),
              "Φ(id) is not the identity");
    }
    return v;
}

Verdict check_lambda_composition(const MorphismTable& k, const MorphismTable& h) {
    const PointMap lhs = lambda_map(star_compose(k, h));
    const PointMap rhs = compose(lambda_map(h), lambda_map(k));
    Verdict v;
    std::string witness;
    for (std::size_t p = 0; p < lhs.image.size(); ++p) {
        if (lhs(p) != rhs(p)) {
            witness = "F=" + lhs.source.name(p);
            break;
        }
    }
    v.add("lambda-composition", witness.empty() && lhs == rhs, witness.empty() ? "spaces differ" : witness);
    return v;
}

Verdict check_phi_composition(const PointMap& g, const PointMap& f) {
    const MorphismTable lhs = phi_map(compose(g, f));
    const MorphismTable rhs = star_compose(phi_map(f), phi_map(g));
    Verdict v;
    std::string witness;
    for (Element a : lhs.source.base().elements()) {
        if (lhs(a) != rhs(a)) {
            witness = "U=" + lhs.source.base().format(a);
            break;
        }
    }
    v.add("phi-composition", witness.empty() && lhs == rhs, witness.empty() ? "algebras differ" : witness);
    return v;
}

}  // namespace dv
