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

#ifndef DV_TOPOLOGY_HPP
#define DV_TOPOLOGY_HPP

#include <vector>

#include "dv/boolean_algebra.hpp"
#include "dv/space.hpp"
#include "dv/subordination.hpp"
#include "dv/verdict.hpp"

namespace dv {

struct RegionOperators {
    PointSet closure;
    PointSet perp;
    PointSet down;
    PointSet up_interior;
};

RegionOperators region_operators(const FiniteSpace& space, PointSet set);

/// Regular opens (U^⊥⊥ = U), order-regular opens (⤊↓U = U), compact opens and
/// their intersection, each in ascending mask order.
struct OpenAlgebras {
    std::vector<PointSet> regular_open;
    std::vector<PointSet> order_regular_open;
    std::vector<PointSet> compact_open;
    std::vector<PointSet> compact_order_regular_open;
};

OpenAlgebras open_algebras(const FiniteSpace& space);

bool is_regular_open(const FiniteSpace& space, PointSet set);
bool is_order_regular_open(const FiniteSpace& space, PointSet set);

/// RO(X) re-encoded as a finite Boolean algebra: its atoms are the minimal
/// nonempty regular opens, and an element is the set of atoms below it.
class RegularOpenAlgebra {
public:
    explicit RegularOpenAlgebra(const FiniteSpace& space);

    const FiniteBooleanAlgebra& algebra() const noexcept { return algebra_; }
    /// Regular opens, ascending.
    const std::vector<PointSet>& members() const noexcept { return members_; }
    const std::vector<PointSet>& atoms() const noexcept { return atoms_; }

    /// The regular open set named by `e` (the RO-join of its atoms).
    PointSet decode(Element e) const;
    /// Inverse of decode; throws InputError if `set` is not regular open.
    Element encode(PointSet set) const;

    /// RO(x) = {U ∈ RO | x ∈ U} as a set of encoded elements.
    ElementSet neighbourhood_filter(std::size_t point) const;

private:
    std::vector<PointSet> members_;
    std::vector<PointSet> atoms_;
    std::vector<PointSet> decoded_;
    FiniteBooleanAlgebra algebra_;
};

/// U ≪ V iff closure(U) ⊆ ↓V.
bool ll_relation(const FiniteSpace& space, PointSet u, PointSet v);

/// (RO(X), ≪) in the encoding of RegularOpenAlgebra.
SubordinationAlgebra ro_subordination_algebra(const FiniteSpace& space, const RegularOpenAlgebra& ro);

/// One verdict per axiom; failures carry a witness expressed in point names.
struct SeparationReport {
    CheckResult t0{"T0", true, {}};
    CheckResult t1{"T1", true, {}};
    CheckResult hausdorff{"Hausdorff", true, {}};
    CheckResult compact{"compact", true, {}};
    CheckResult order_regular{"order-regular", true, {}};
    CheckResult order_normal{"order-normal", true, {}};

    Verdict to_verdict() const;
};

SeparationReport separation_report(const FiniteSpace& space);

bool is_t0(const FiniteSpace& space);
/// Every cover drawn from the open family has a finite subcover.
bool is_compact(const FiniteSpace& space);
/// For every closed B and x ∉ ⤊B there are disjoint opens U, V with x ∈ ↓U
/// and ⤊B ⊆ V. With x ∈ U instead, the dual space of the four-element
/// algebra would already fail, since its bottom point lies only in X.
CheckResult check_order_regular(const FiniteSpace& space);
/// For every closed A and regular closed B with A ∩ ⤊B = ∅ there are disjoint
/// opens U, V with A ⊆ ↓U and ⤊B ⊆ V.
CheckResult check_order_normal(const FiniteSpace& space);

/// An open U is well rounded if for every closed B ⊆ ↓U there are disjoint
/// opens V, W with B ⊆ ↓V and −W ⊆ ↓U.
bool is_well_rounded(const FiniteSpace& space, PointSet open);
std::vector<PointSet> well_rounded_opens(const FiniteSpace& space);

/// Checks the three dV-space conditions. Check names: T0, compact,
/// order-normal, RO-basis, RO-order-regular, points-concordant,
/// filters-represented.
Verdict is_dv_space(const FiniteSpace& space);

/// Checks the UV-space conditions. Check names: T0, compact, CORO-meet-closed,
/// CORO-complement-closed, CORO-basis, filters-represented.
Verdict is_uv_space(const FiniteSpace& space);

}  // namespace dv

#endif  // DV_TOPOLOGY_HPP
