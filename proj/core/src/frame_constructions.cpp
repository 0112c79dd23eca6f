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

#include "dv/frame_constructions.hpp"

#include <algorithm>
#include <numeric>

#include "dv/duality.hpp"
#include "dv/error.hpp"
#include "dv/topology.hpp"

namespace dv {

namespace {

void require_compact_regular(const FiniteFrame& l, const char* what) {
    if (!check_frame(l).compact_regular()) throw PreconditionError(std::string(what) + " requires a compact regular frame");
}

FiniteBooleanAlgebra algebra_with_names(std::vector<std::string> names, char fallback) {
    try {
        return FiniteBooleanAlgebra(names);
    } catch (const InputError&) {
        if (names.size() > FiniteBooleanAlgebra::kMaxAtoms) throw;
        for (std::size_t i = 0; i < names.size(); ++i) names[i] = fallback + std::to_string(i);
        return FiniteBooleanAlgebra(std::move(names));
    }
}

ElementSet element_set_where(const FiniteBooleanAlgebra& alg, const std::function<bool(Element)>& pred) {
    ElementSet out;
    for (Element e : alg.elements())
        if (pred(e)) out.insert(e);
    return out;
}

}  // namespace

Element Booleanization::encode(std::size_t frame_index) const {
    auto it = std::find(frame_element.begin(), frame_element.end(), frame_index);
    if (it == frame_element.end()) throw InputError("frame element is not regular");
    return Element{static_cast<std::uint32_t>(it - frame_element.begin())};
}

Booleanization booleanization(const FiniteFrame& l) {
    require_compact_regular(l, "booleanization");
    auto neg = [&](std::size_t a) { return l.pseudo_complement(a); };
    std::vector<std::size_t> regular;
    for (std::size_t a = 0; a < l.size(); ++a)
        if (neg(neg(a)) == a) regular.push_back(a);

    std::vector<std::size_t> atoms;
    for (std::size_t a : regular) {
        if (a == l.bottom()) continue;
        const bool minimal = std::none_of(regular.begin(), regular.end(), [&](std::size_t b) {
            return b != a && b != l.bottom() && l.leq(b, a);
        });
        if (minimal) atoms.push_back(a);
    }
    std::vector<std::string> names;
    for (std::size_t a : atoms) names.push_back(l.name(a));
    const FiniteBooleanAlgebra base = algebra_with_names(std::move(names), 'b');

    Booleanization out{SubordinationAlgebra(), {}};
    for (Element e : base.elements()) {
        std::size_t j = l.bottom();
        for (unsigned i = 0; i < atoms.size(); ++i)
            if ((e.bits() >> i) & 1U) j = l.join(j, atoms[i]);
        out.frame_element.push_back(neg(neg(j)));
    }
    {
        auto sorted = out.frame_element;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != regular) throw Error("regular elements of the frame do not form a Boolean algebra on its atoms");
    }
    out.algebra = SubordinationAlgebra::from_predicate(base, [&](Element a, Element b) {
        return l.rather_below(out.frame_element[a.index()], out.frame_element[b.index()]);
    });
    return out;
}

RoundIdealFrame round_ideal_frame(const SubordinationAlgebra& v) {
    if (!check_axioms(v).compingent()) throw PreconditionError("round_ideal_frame requires a compingent algebra");
    const auto& base = v.base();
    RoundIdealFrame out{FiniteFrame({"0"}, {}), round_ideals(v)};
    std::vector<std::string> names;
    for (Ideal i : out.ideals) names.push_back("I" + base.compact_name(i.generator()));
    out.frame = FiniteFrame::from_order(std::move(names), [&](std::size_t a, std::size_t b) {
        return base.leq(out.ideals[a].generator(), out.ideals[b].generator());
    });
    return out;
}

std::optional<std::vector<unsigned>> find_algebra_isomorphism(const SubordinationAlgebra& x,
                                                              const SubordinationAlgebra& y) {
    const unsigned n = x.base().atom_count();
    if (n != y.base().atom_count()) return std::nullopt;
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        auto image = [&](Element e) {
            std::uint32_t bits = 0;
            for (unsigned i = 0; i < n; ++i)
                if ((e.bits() >> i) & 1U) bits |= std::uint32_t{1} << perm[i];
            return Element{bits};
        };
        bool ok = true;
        for (Element a : x.base().elements()) {
            for (Element b : x.base().elements()) {
                if (x.prec(a, b) != y.prec(image(a), image(b))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Verdict verify_gur_frame(const FiniteFrame& l) {
    const Booleanization b = booleanization(l);
    const RoundIdealFrame r = round_ideal_frame(b.algebra);
    const auto& base = b.algebra.base();
    Verdict v;
    std::vector<std::size_t> map;
    std::string witness;
    for (std::size_t a = 0; a < l.size(); ++a) {
        const ElementSet below =
            element_set_where(base, [&](Element e) { return l.rather_below(b.frame_element[e.index()], a); });
        auto it = std::find_if(r.ideals.begin(), r.ideals.end(),
                               [&](Ideal i) { return i.members(base) == below; });
        if (it == r.ideals.end()) {
            witness = "{b ∈ B(L) | b ≺ " + l.name(a) + "} is not a round ideal";
            break;
        }
        map.push_back(static_cast<std::size_t>(it - r.ideals.begin()));
    }
    if (witness.empty() && !is_order_isomorphism(l, r.frame, map)) witness = "canonical map is not an order isomorphism";
    v.add("canonical-map", witness.empty(), witness);
    const bool iso = witness.empty() || find_order_isomorphism(l, r.frame).has_value();
    v.add("isomorphic", iso, "L and 𝔑(B(L)) are not order isomorphic");
    return v;
}

Verdict verify_gur_algebra(const SubordinationAlgebra& v) {
    const RoundIdealFrame r = round_ideal_frame(v);
    Verdict out;
    if (!check_frame(r.frame).compact_regular()) {
        out.add("round-ideal-frame", false, "𝔑(V) is not a compact regular frame");
        return out;
    }
    const Booleanization b = booleanization(r.frame);
    const auto& base = v.base();
    const auto& target = b.algebra.base();
    std::vector<Element> image;
    std::string witness;
    for (Element a : base.elements()) {
        const ElementSet below = v.below(a);
        auto it = std::find_if(r.ideals.begin(), r.ideals.end(), [&](Ideal i) { return i.members(base) == below; });
        if (it == r.ideals.end()) {
            witness = "{b | b ≺ " + base.format(a) + "} is not a round ideal";
            break;
        }
        try {
            image.push_back(b.encode(static_cast<std::size_t>(it - r.ideals.begin())));
        } catch (const InputError&) {
            witness = "the round ideal below " + base.format(a) + " is not regular in 𝔑(V)";
            break;
        }
    }
    if (witness.empty()) {
        if (target.size() != base.size()) witness = "B(𝔑(V)) has a different size";
        for (Element a : base.elements()) {
            for (Element c : base.elements()) {
                if (!witness.empty()) break;
                const Element ia = image[a.index()];
                const Element ic = image[c.index()];
                if ((a == c) != (ia == ic) || base.leq(a, c) != target.leq(ia, ic) ||
                    v.prec(a, c) != b.algebra.prec(ia, ic)) {
                    witness = "canonical map fails at a=" + base.format(a) + ", b=" + base.format(c);
                }
            }
        }
    }
    out.add("canonical-map", witness.empty(), witness);
    const bool iso = witness.empty() || find_algebra_isomorphism(v, b.algebra).has_value();
    out.add("isomorphic", iso, "V and B(𝔑(V)) are not isomorphic");
    return out;
}

Verdict verify_gur(const FiniteFrame& l, const SubordinationAlgebra& v) {
    Verdict out;
    out.merge(verify_gur_frame(l), "frame");
    out.merge(verify_gur_algebra(v), "algebra");
    return out;
}

PointSet check_set(const FiniteFrame& l, std::size_t a) {
    const auto points = l.non_top();
    PointSet out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (l.rather_below(l.pseudo_complement(a), points[i])) out.insert(i);
    return out;
}

PointSet box_set(const FiniteFrame& l, std::size_t a) {
    const auto points = l.non_top();
    PointSet out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (l.join(a, points[i]) == l.top()) out.insert(i);
    return out;
}

namespace {

FiniteSpace space_on_non_top(const FiniteFrame& l, PointSet (*generator)(const FiniteFrame&, std::size_t)) {
    const auto points = l.non_top();
    if (points.size() > FiniteSpace::kMaxPoints) throw InputError("frame has too many elements for a point space");
    std::vector<std::string> names;
    for (std::size_t a : points) names.push_back(l.name(a));
    std::vector<PointSet> family;
    for (std::size_t a = 0; a < l.size(); ++a) family.push_back(generator(l, a));
    return generate_topology(std::move(names), family);
}

}  // namespace

FiniteSpace xi_space(const FiniteFrame& l) {
    require_compact_regular(l, "xi_space");
    return space_on_non_top(l, check_set);
}

FiniteSpace uv_space(const FiniteFrame& l) {
    require_compact_regular(l, "uv_space");
    return space_on_non_top(l, box_set);
}

Verdict verify_xi_uv(const FiniteFrame& l) {
    const FiniteSpace xi = xi_space(l);
    const FiniteSpace uv = uv_space(l);
    Verdict v;
    v.add("same-topology", xi.opens() == uv.opens(), "the topologies generated by ǎ and □a differ");

    auto neg = [&](std::size_t a) { return l.pseudo_complement(a); };
    std::string check_w, box_w;
    for (std::size_t a = 0; a < l.size(); ++a) {
        if (check_w.empty() && check_set(l, a) != box_set(l, neg(neg(a)))) check_w = "a=" + l.name(a);
        PointSet joined;
        for (std::size_t b = 0; b < l.size(); ++b)
            if (l.rather_below(b, a)) joined |= check_set(l, b);
        if (box_w.empty() && joined != box_set(l, a)) box_w = "a=" + l.name(a);
    }
    v.add("check-is-box", check_w.empty(), check_w);
    v.add("box-identity", box_w.empty(), box_w);

    // b ↦ (I_b)^δ with I_b = {c ∈ B(L) | c ≺ b}; under it ǎ becomes the basic
    // open of ¬¬a.
    const Booleanization bl = booleanization(l);
    const auto& base = bl.algebra.base();
    const DualSpace dual = lambda_space(bl.algebra);
    const auto points = l.non_top();
    std::vector<std::size_t> map;
    std::string map_w;
    for (std::size_t b : points) {
        const ElementSet delta = element_set_where(base, [&](Element e) {
            return l.rather_below(bl.frame_element[base.complement(e).index()], b);
        });
        const auto f = as_filter(base, delta);
        const auto index = f ? dual.point_of(*f) : std::nullopt;
        if (!index) {
            map_w = "(I_b)^δ is not a concordant filter for b=" + l.name(b);
            break;
        }
        map.push_back(*index);
    }
    if (map_w.empty() && !is_homeomorphism(xi, dual.space, map)) map_w = "b ↦ (I_b)^δ is not a homeomorphism";
    if (map_w.empty()) {
        for (std::size_t a = 0; a < l.size(); ++a) {
            PointSet image;
            for (std::size_t i : check_set(l, a).points()) image.insert(map[i]);
            if (image != dual.hat_of(bl.encode(neg(neg(a))))) {
                map_w = "ǎ does not correspond to the basic open of ¬¬a for a=" + l.name(a);
                break;
            }
        }
    }
    v.add("lambda-homeomorphism", map_w.empty(), map_w);
    return v;
}

WoroFrame woro_frame(const FiniteSpace& x) {
    if (!is_dv_space(x).passed()) throw PreconditionError("woro_frame requires a dV-space");
    WoroFrame out{FiniteFrame({"0"}, {}), {}};
    for (PointSet u : x.opens())
        if (is_order_regular_open(x, u) && is_well_rounded(x, u)) out.members.push_back(u);
    std::vector<std::string> names;
    for (PointSet u : out.members) names.push_back(x.format(u));
    out.frame = FiniteFrame::from_order(std::move(names), [&](std::size_t a, std::size_t b) {
        return out.members[a].subset_of(out.members[b]);
    });
    return out;
}

Verdict verify_round_iso(const SubordinationAlgebra& v) {
    if (!check_axioms(v).compingent()) throw PreconditionError("verify_round_iso requires a compingent algebra");
    const auto& base = v.base();
    const DualSpace dual = lambda_space(v);
    const FiniteSpace& s = dual.space;
    const auto ideals = round_ideals(v);
    const auto woro = woro_frame(s).members;

    auto alpha = [&](ElementSet members) {
        PointSet out;
        for (Element b : members.elements()) out |= dual.hat_of(b);
        return out;
    };
    auto beta = [&](PointSet u) {
        return element_set_where(base, [&](Element b) { return s.closure(dual.hat_of(b)).subset_of(s.down(u)); });
    };
    auto in_woro = [&](PointSet u) { return std::binary_search(woro.begin(), woro.end(), u); };

    Verdict out;
    std::string alpha_w, ba_w, mono_w;
    for (Ideal i : ideals) {
        const PointSet a = alpha(i.members(base));
        if (alpha_w.empty() && !in_woro(a)) alpha_w = "α(↓" + base.format(i.generator()) + ") = " + s.format(a);
        if (ba_w.empty() && beta(a) != i.members(base)) ba_w = "I=↓" + base.format(i.generator());
        for (Ideal j : ideals) {
            if (mono_w.empty() && base.leq(i.generator(), j.generator()) &&
                !a.subset_of(alpha(j.members(base)))) {
                mono_w = "α is not monotone at ↓" + base.format(i.generator());
            }
        }
    }
    std::string beta_w, ab_w;
    for (PointSet u : woro) {
        const ElementSet b = beta(u);
        const bool lands = std::any_of(ideals.begin(), ideals.end(), [&](Ideal i) { return i.members(base) == b; });
        if (beta_w.empty() && !lands) beta_w = "β(" + s.format(u) + ") is not a round ideal";
        if (ab_w.empty() && alpha(b) != u) ab_w = "U=" + s.format(u);
        for (PointSet w : woro) {
            if (mono_w.empty() && u.subset_of(w) && !b.subset_of(beta(w))) {
                mono_w = "β is not monotone at " + s.format(u);
            }
        }
    }
    out.add("alpha-lands", alpha_w.empty(), alpha_w);
    out.add("beta-lands", beta_w.empty(), beta_w);
    out.add("beta-alpha", ba_w.empty(), ba_w);
    out.add("alpha-beta", ab_w.empty(), ab_w);
    out.add("monotone", mono_w.empty(), mono_w);
    return out;
}

Verdict verify_chfis(const FiniteFrame& l) {
    const FiniteSpace xi = xi_space(l);
    const Booleanization bl = booleanization(l);
    const WoroFrame w = woro_frame(xi);
    Verdict v;
    std::vector<std::size_t> map;
    std::string witness;
    for (std::size_t a = 0; a < l.size(); ++a) {
        PointSet u;
        for (std::size_t c : bl.frame_element)
            if (l.rather_below(c, a)) u |= check_set(l, c);
        auto it = std::lower_bound(w.members.begin(), w.members.end(), u);
        if (it == w.members.end() || *it != u) {
            witness = "image of " + l.name(a) + " is not a well-rounded ORO set";
            break;
        }
        map.push_back(static_cast<std::size_t>(it - w.members.begin()));
    }
    if (witness.empty() && !is_order_isomorphism(l, w.frame, map)) witness = "canonical map is not an order isomorphism";
    v.add("canonical-map", witness.empty(), witness);
    const bool iso = witness.empty() || find_order_isomorphism(l, w.frame).has_value();
    v.add("isomorphic", iso, "L and wORO(Ξ(L)) are not order isomorphic");
    return v;
}

ChoiceFreeProduct choice_free_product(const std::vector<FiniteSpace>& spaces) {
    for (const auto& x : spaces) {
        for (std::size_t p = 0; p < x.size(); ++p) {
            if (!x.is_open(PointSet::single(p))) {
                throw PreconditionError("choice_free_product requires discrete (finite compact Hausdorff) spaces");
            }
        }
    }
    const FiniteSpace point({"pt"}, {PointSet{}, PointSet::single(0)});
    FiniteFrame coproduct = omega(point);
    FiniteSpace product = spaces.empty() ? point : spaces.front();
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        coproduct = frame_coproduct(coproduct, omega(spaces[i]));
        if (i > 0) product = product_space(product, spaces[i]);
    }
    ChoiceFreeProduct out{xi_space(coproduct), coproduct, {}};
    out.verdict.add("compact", is_compact(out.space), "the choice-free product is not compact");
    const Verdict dv = is_dv_space(out.space);
    out.verdict.add("dV-space", dv.passed(), dv.first_failure() ? dv.first_failure()->name : "");
    const FiniteSpace uv = uv_space(omega(product));
    out.verdict.add("homeomorphic-to-uv", find_homeomorphism(out.space, uv).has_value(),
                    "not homeomorphic to the upper Vietoris space of the product");
    return out;
}

}  // namespace dv
