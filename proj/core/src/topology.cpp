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

#include "dv/topology.hpp"

#include <algorithm>

#include "dv/error.hpp"
#include "dv/filters.hpp"

namespace dv {

RegionOperators region_operators(const FiniteSpace& space, PointSet set) {
    if (!set.subset_of(space.full())) throw InputError("subset mentions a point outside the space");
    return {space.closure(set), space.perp(set), space.down(set), space.up_interior(set)};
}

bool is_regular_open(const FiniteSpace& space, PointSet set) {
    return space.is_open(set) && space.perp(space.perp(set)) == set;
}

bool is_order_regular_open(const FiniteSpace& space, PointSet set) {
    return space.up_interior(space.down(set)) == set;
}

OpenAlgebras open_algebras(const FiniteSpace& space) {
    OpenAlgebras out;
    // A set with ⤊↓U = U is upward closed, and in a finite space every
    // upward-closed set is open, so scanning the opens finds all of them.
    for (PointSet u : space.opens()) {
        if (is_regular_open(space, u)) out.regular_open.push_back(u);
        const bool oro = is_order_regular_open(space, u);
        if (oro) out.order_regular_open.push_back(u);
        // Every open of a finite space is compact.
        out.compact_open.push_back(u);
        if (oro) out.compact_order_regular_open.push_back(u);
    }
    return out;
}

RegularOpenAlgebra::RegularOpenAlgebra(const FiniteSpace& space) {
    for (PointSet u : space.opens()) {
        if (is_regular_open(space, u)) members_.push_back(u);
    }
    for (PointSet u : members_) {
        if (u.empty()) continue;
        const bool minimal = std::none_of(members_.begin(), members_.end(), [u](PointSet v) {
            return !v.empty() && v != u && v.subset_of(u);
        });
        if (minimal) atoms_.push_back(u);
    }
    std::vector<std::string> names;
    for (PointSet a : atoms_) {
        std::string name;
        for (std::size_t x : a.points()) {
            if (!name.empty()) name += '+';
            name += space.name(x);
        }
        names.push_back(name);
    }
    try {
        algebra_ = FiniteBooleanAlgebra(names);
    } catch (const InputError&) {
        if (atoms_.size() > FiniteBooleanAlgebra::kMaxAtoms) throw;
        // Point names that cannot serve as atom names fall back to r0, r1, ...
        for (std::size_t i = 0; i < names.size(); ++i) names[i] = "r" + std::to_string(i);
        algebra_ = FiniteBooleanAlgebra(names);
    }
    decoded_.resize(algebra_.size());
    for (Element e : algebra_.elements()) {
        PointSet unions;
        for (unsigned i = 0; i < atoms_.size(); ++i) {
            if ((e.bits() >> i) & 1U) unions |= atoms_[i];
        }
        decoded_[e.index()] = space.perp(space.perp(unions));
    }
}

PointSet RegularOpenAlgebra::decode(Element e) const {
    algebra_.check(e);
    return decoded_[e.index()];
}

Element RegularOpenAlgebra::encode(PointSet set) const {
    std::uint32_t bits = 0;
    for (unsigned i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].subset_of(set)) bits |= std::uint32_t{1} << i;
    }
    if (decoded_[bits] != set) throw InputError("set is not regular open");
    return Element{bits};
}

ElementSet RegularOpenAlgebra::neighbourhood_filter(std::size_t point) const {
    ElementSet out;
    for (Element e : algebra_.elements()) {
        if (decoded_[e.index()].contains(point)) out.insert(e);
    }
    return out;
}

bool ll_relation(const FiniteSpace& space, PointSet u, PointSet v) {
    return space.closure(u).subset_of(space.down(v));
}

SubordinationAlgebra ro_subordination_algebra(const FiniteSpace& space, const RegularOpenAlgebra& ro) {
    return SubordinationAlgebra::from_predicate(ro.algebra(), [&](Element a, Element b) {
        return ll_relation(space, ro.decode(a), ro.decode(b));
    });
}

Verdict SeparationReport::to_verdict() const {
    Verdict v;
    for (const CheckResult* c : {&t0, &t1, &hausdorff, &compact, &order_regular, &order_normal}) {
        v.add(c->name, c->passed, c->witness);
    }
    return v;
}

bool is_t0(const FiniteSpace& space) {
    for (std::size_t x = 0; x < space.size(); ++x)
        for (std::size_t y = x + 1; y < space.size(); ++y)
            if (space.specialization_leq(x, y) && space.specialization_leq(y, x)) return false;
    return true;
}

bool is_compact(const FiniteSpace& space) {
    // Covers are subfamilies of a finite open family, hence finite; for small
    // families we still extract an irredundant subcover from each cover.
    const auto& opens = space.opens();
    if (opens.size() > 16) return true;
    const std::uint32_t count = static_cast<std::uint32_t>(opens.size());
    for (std::uint32_t family = 0; family < (std::uint32_t{1} << count); ++family) {
        PointSet cover;
        for (std::uint32_t i = 0; i < count; ++i)
            if ((family >> i) & 1U) cover |= opens[i];
        if (cover != space.full()) continue;
        std::uint32_t sub = family;
        for (std::uint32_t i = 0; i < count; ++i) {
            if (!((sub >> i) & 1U)) continue;
            const std::uint32_t without = sub & ~(std::uint32_t{1} << i);
            PointSet rest;
            for (std::uint32_t j = 0; j < count; ++j)
                if ((without >> j) & 1U) rest |= opens[j];
            if (rest == space.full()) sub = without;
        }
        PointSet check;
        for (std::uint32_t i = 0; i < count; ++i)
            if ((sub >> i) & 1U) check |= opens[i];
        if (check != space.full()) return false;
    }
    return true;
}

// Among disjoint pairs of opens with V ⊇ S, the pair V = smallest open around
// S, U = complement of its closure is the best one for every condition of
// the form "target ⊆ U" or "target ⊆ ↓U", since both are monotone in U.
namespace {

PointSet largest_open_disjoint_from_smallest_open_around(const FiniteSpace& space, PointSet s) {
    const PointSet v = space.smallest_open_containing(s);
    return space.complement(space.closure(v));
}

}  // namespace

CheckResult check_order_regular(const FiniteSpace& space) {
    CheckResult out{"order-regular", true, {}};
    for (PointSet b : space.closed_sets()) {
        const PointSet inner = space.up_interior(b);
        const PointSet room = largest_open_disjoint_from_smallest_open_around(space, inner);
        const PointSet reach = space.down(room);
        for (std::size_t x : (space.full() - inner).points()) {
            if (!reach.contains(x)) {
                out.passed = false;
                out.witness = "closed B=" + space.format(b) + ", point " + space.name(x);
                return out;
            }
        }
    }
    return out;
}

CheckResult check_order_normal(const FiniteSpace& space) {
    CheckResult out{"order-normal", true, {}};
    std::vector<PointSet> regular_closed;
    for (PointSet u : space.opens()) {
        if (is_regular_open(space, u)) regular_closed.push_back(space.complement(u));
    }
    std::sort(regular_closed.begin(), regular_closed.end());
    for (PointSet a : space.closed_sets()) {
        for (PointSet b : regular_closed) {
            const PointSet inner = space.up_interior(b);
            if (!a.disjoint(inner)) continue;
            const PointSet room = largest_open_disjoint_from_smallest_open_around(space, inner);
            if (!a.subset_of(space.down(room))) {
                out.passed = false;
                out.witness = "closed A=" + space.format(a) + ", regular closed B=" + space.format(b);
                return out;
            }
        }
    }
    return out;
}

SeparationReport separation_report(const FiniteSpace& space) {
    SeparationReport r;
    const std::size_t n = space.size();
    for (std::size_t x = 0; x < n && r.t0.passed; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (space.specialization_leq(x, y) && space.specialization_leq(y, x)) {
                r.t0.passed = false;
                r.t0.witness = "points " + space.name(x) + ", " + space.name(y) + " are indistinguishable";
                break;
            }
    for (std::size_t x = 0; x < n && r.t1.passed; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && space.specialization_leq(x, y)) {
                r.t1.passed = false;
                r.t1.witness = "every open containing " + space.name(x) + " contains " + space.name(y);
                break;
            }
    for (std::size_t x = 0; x < n && r.hausdorff.passed; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const PointSet nx = space.smallest_open_containing(PointSet::single(x));
            const PointSet ny = space.smallest_open_containing(PointSet::single(y));
            if (!nx.disjoint(ny)) {
                r.hausdorff.passed = false;
                r.hausdorff.witness = "points " + space.name(x) + ", " + space.name(y) + " cannot be separated";
                break;
            }
        }
    r.compact.passed = is_compact(space);
    if (!r.compact.passed) r.compact.witness = "a cover has no finite subcover";
    r.order_regular = check_order_regular(space);
    r.order_normal = check_order_normal(space);
    return r;
}

bool is_well_rounded(const FiniteSpace& space, PointSet open) {
    if (!space.is_open(open)) return false;
    const PointSet below = space.down(open);
    const PointSet room = largest_open_disjoint_from_smallest_open_around(space, space.complement(below));
    const PointSet reach = space.down(room);
    for (PointSet b : space.closed_sets()) {
        if (b.subset_of(below) && !b.subset_of(reach)) return false;
    }
    return true;
}

std::vector<PointSet> well_rounded_opens(const FiniteSpace& space) {
    std::vector<PointSet> out;
    for (PointSet u : space.opens()) {
        if (is_well_rounded(space, u)) out.push_back(u);
    }
    return out;
}

Verdict is_dv_space(const FiniteSpace& space) {
    Verdict v;
    const auto sep = separation_report(space);
    v.add("T0", sep.t0.passed, sep.t0.witness);
    v.add("compact", sep.compact.passed, sep.compact.witness);
    v.add("order-normal", sep.order_normal.passed, sep.order_normal.witness);

    const auto algebras = open_algebras(space);
    v.add("RO-basis", is_basis(space, algebras.regular_open), "RO(X) does not generate every open");
    {
        std::string witness;
        for (PointSet u : algebras.regular_open) {
            if (!is_order_regular_open(space, u)) {
                witness = "regular open " + space.format(u) + " is not order-regular open";
                break;
            }
        }
        v.add("RO-order-regular", witness.empty(), witness);
    }

    const RegularOpenAlgebra ro(space);
    const SubordinationAlgebra ll = ro_subordination_algebra(space, ro);
    const auto& base = ll.base();
    {
        std::string witness;
        for (std::size_t x = 0; x < space.size() && witness.empty(); ++x) {
            const auto f = as_filter(base, ro.neighbourhood_filter(x));
            if (!f || !is_concordant(ll, *f)) witness = "RO(" + space.name(x) + ") is not a concordant filter";
        }
        v.add("points-concordant", witness.empty(), witness);
    }
    {
        std::string witness;
        for (Element g : base.elements()) {
            const Filter f(g);
            if (!f.proper()) continue;
            const ElementSet round = round_part(ll, f);
            bool represented = false;
            for (std::size_t x = 0; x < space.size() && !represented; ++x) {
                represented = ro.neighbourhood_filter(x) == round;
            }
            if (!represented) {
                witness = "filter ↑" + space.format(ro.decode(g)) + " has a round part that is RO(x) for no x";
                break;
            }
        }
        v.add("filters-represented", witness.empty(), witness);
    }
    return v;
}

Verdict is_uv_space(const FiniteSpace& space) {
    Verdict v;
    const auto sep = separation_report(space);
    v.add("T0", sep.t0.passed, sep.t0.witness);
    v.add("compact", sep.compact.passed, sep.compact.witness);

    const auto coro = open_algebras(space).compact_order_regular_open;
    auto in_coro = [&](PointSet u) { return std::binary_search(coro.begin(), coro.end(), u); };

    std::string meet_witness;
    std::string complement_witness;
    for (PointSet u : coro) {
        if (complement_witness.empty() && !in_coro(space.complement(space.down(u)))) {
            complement_witness = "−↓" + space.format(u) + " is not in CORO(X)";
        }
        for (PointSet w : coro) {
            if (meet_witness.empty() && !in_coro(u & w)) {
                meet_witness = space.format(u) + " ∩ " + space.format(w) + " is not in CORO(X)";
            }
        }
    }
    v.add("CORO-meet-closed", meet_witness.empty(), meet_witness);
    v.add("CORO-complement-closed", complement_witness.empty(), complement_witness);
    v.add("CORO-basis", is_basis(space, coro), "CORO(X) does not generate every open");

    if (!meet_witness.empty()) {
        v.add("filters-represented", false, "CORO(X) is not a lattice; filters were not enumerated");
        return v;
    }
    auto neighbourhoods = [&](std::size_t x) {
        std::vector<PointSet> out;
        for (PointSet u : coro)
            if (u.contains(x)) out.push_back(u);
        return out;
    };
    std::string witness;
    for (PointSet g : coro) {
        if (g.empty()) continue;
        std::vector<PointSet> filter;
        for (PointSet u : coro)
            if (g.subset_of(u)) filter.push_back(u);
        bool represented = false;
        for (std::size_t x = 0; x < space.size() && !represented; ++x) represented = neighbourhoods(x) == filter;
        if (!represented) {
            witness = "filter ↑" + space.format(g) + " is CORO(x) for no x";
            break;
        }
    }
    v.add("filters-represented", witness.empty(), witness);
    return v;
}

}  // namespace dv
