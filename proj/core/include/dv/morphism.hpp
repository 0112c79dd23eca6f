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

#ifndef DV_MORPHISM_HPP
#define DV_MORPHISM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dv/space.hpp"
#include "dv/subordination.hpp"
#include "dv/verdict.hpp"

namespace dv {

/// A function between the carriers of two subordination algebras, given as
/// the image of every source element (indexed by encoding).
struct MorphismTable {
    SubordinationAlgebra source;
    SubordinationAlgebra target;
    std::vector<Element> image;

    Element operator()(Element a) const { return image.at(a.index()); }
    friend bool operator==(const MorphismTable&, const MorphismTable&) = default;
};

/// A function between the points of two finite spaces.
struct PointMap {
    FiniteSpace source;
    FiniteSpace target;
    std::vector<std::size_t> image;

    std::size_t operator()(std::size_t x) const { return image.at(x); }
    PointSet preimage(PointSet v) const;
    friend bool operator==(const PointMap&, const PointMap&) = default;
};

/// Throws InputError unless the table is total and lands in the target.
void validate(const MorphismTable& h);
void validate(const PointMap& f);

MorphismTable identity_morphism(const SubordinationAlgebra& v);
PointMap identity_map(const FiniteSpace& x);

/// Checks: V1, V2, V3, V4, preserves-leq, preserves-prec. Throws
/// PreconditionError unless both algebras are compingent.
Verdict check_devries_morphism(const MorphismTable& h);

/// k ⋆ h : a ↦ ⋁{k(h(b)) | b ≺ a}. Throws InputError when the target of h
/// is not the source of k and PreconditionError unless both are valid.
MorphismTable star_compose(const MorphismTable& k, const MorphismTable& h);

/// Ordinary composition g ∘ f.
PointMap compose(const PointMap& g, const PointMap& f);

/// Checks: continuous, weakly-dense. Throws PreconditionError unless both
/// spaces are dV-spaces.
Verdict check_dv_map(const PointMap& f);

/// Φ(f)(U) = (f⁻¹U)^⊥⊥ as a morphism Φ(Y) → Φ(X).
MorphismTable phi_map(const PointMap& f);

/// Λ(h)(F) = ↠{a | h(a) ∈ F} as a map Λ(V₂) → Λ(V₁).
PointMap lambda_map(const MorphismTable& h);

/// check_dv_map of Λ(h) plus the continuity identity
/// Λ(h)⁻¹[â] = ⋃_{c ≺ a} (h c)^ (check name continuity-identity).
Verdict check_lambda_map(const MorphismTable& h);
/// check_devries_morphism of Φ(f).
Verdict check_phi_map(const PointMap& f);

/// Any subset of the four inputs; whatever applies is checked.
struct RoundtripInputs {
    std::optional<SubordinationAlgebra> algebra;
    std::optional<FiniteSpace> space;
    std::optional<MorphismTable> morphism;
    std::optional<PointMap> map;
};

/// Object round trips (prefixes obj1, obj2), the identities
/// ΦΛ(h)(â) = (h a)^ (check mainthm-i) and ΛΦ(f)(RO(x)) = RO(f x)
/// (check mainthm-ii), and preservation of identities by Λ and Φ.
Verdict verify_duality_roundtrip(const RoundtripInputs& in);

/// Λ(k ⋆ h) = Λ(h) ∘ Λ(k).
Verdict check_lambda_composition(const MorphismTable& k, const MorphismTable& h);
/// Φ(g ∘ f) = Φ(f) ⋆ Φ(g).
Verdict check_phi_composition(const PointMap& g, const PointMap& f);

}  // namespace dv

#endif  // DV_MORPHISM_HPP
