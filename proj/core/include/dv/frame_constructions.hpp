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

#ifndef DV_FRAME_CONSTRUCTIONS_HPP
#define DV_FRAME_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dv/filters.hpp"
#include "dv/frame.hpp"
#include "dv/space.hpp"
#include "dv/subordination.hpp"
#include "dv/verdict.hpp"

namespace dv {

/// B(L) with its rather-below relation, plus the frame element behind each
/// encoded element.
struct Booleanization {
    SubordinationAlgebra algebra;
    /// frame_element[e] is the regular element of L encoded by e.
    std::vector<std::size_t> frame_element;

    /// Encoding of a regular element of L; throws InputError otherwise.
    Element encode(std::size_t frame_index) const;
};

/// Regular elements (¬¬a = a) re-atomized as a Boolean algebra, related by
/// rather-below. Throws PreconditionError unless L is a compact regular frame.
Booleanization booleanization(const FiniteFrame& l);

/// 𝔑(V): the round ideals of V (including ↓1) under inclusion.
struct RoundIdealFrame {
    FiniteFrame frame;
    /// ideals[i] is frame element i.
    std::vector<Ideal> ideals;
};

/// Throws PreconditionError unless V is compingent.
RoundIdealFrame round_ideal_frame(const SubordinationAlgebra& v);

/// L ≅ 𝔑(B(L)) via a ↦ {b ∈ B(L) | b ≺ a}. Checks: canonical-map, isomorphic.
Verdict verify_gur_frame(const FiniteFrame& l);
/// V ≅ B(𝔑(V)) via a ↦ {b | b ≺ a}. Checks: canonical-map, isomorphic.
Verdict verify_gur_algebra(const SubordinationAlgebra& v);
/// Both directions, under the prefixes frame and algebra.
Verdict verify_gur(const FiniteFrame& l, const SubordinationAlgebra& v);

/// Atom permutation carrying x onto y (image of each atom), if one exists.
std::optional<std::vector<unsigned>> find_algebra_isomorphism(const SubordinationAlgebra& x,
                                                              const SubordinationAlgebra& y);

/// ǎ = {b ∈ L⁻ | ¬a ≺ b}, as a set of positions in L.non_top().
PointSet check_set(const FiniteFrame& l, std::size_t a);
/// □a = {b ∈ L⁻ | a ∨ b = 1}, as a set of positions in L.non_top().
PointSet box_set(const FiniteFrame& l, std::size_t a);

/// Ξ(L) = (L⁻, δ); point i is L.non_top()[i] and carries its name. Throws
/// PreconditionError unless L is compact regular.
FiniteSpace xi_space(const FiniteFrame& l);
/// UV(L) = (L⁻, τ_□) on the same points as xi_space.
FiniteSpace uv_space(const FiniteFrame& l);

/// Checks: same-topology, check-is-box (ǎ = □¬¬a), box-identity
/// (□a = ⋃_{b ≺ a} b̌), lambda-homeomorphism (b ↦ (I_b)^δ onto Λ(B(L))).
Verdict verify_xi_uv(const FiniteFrame& l);

/// Well-rounded order-regular opens of X under inclusion.
struct WoroFrame {
    FiniteFrame frame;
    std::vector<PointSet> members;
};

/// Throws PreconditionError unless X is a dV-space.
WoroFrame woro_frame(const FiniteSpace& x);

/// α(I) = ⋃_{b ∈ I} b̂ and β(U) = {b | cl b̂ ⊆ ↓U} between 𝔑(V) and
/// wORO(Λ(V)). Checks: alpha-lands, beta-lands, beta-alpha, alpha-beta,
/// monotone. Throws PreconditionError unless V is compingent.
Verdict verify_round_iso(const SubordinationAlgebra& v);

/// L ≅ wORO(Ξ(L)) via a ↦ ⋃{č | c ∈ B(L), c ≺ a}. Checks: canonical-map,
/// isomorphic.
Verdict verify_chfis(const FiniteFrame& l);

struct ChoiceFreeProduct {
    /// Ξ(⊕ Ω(X_i)).
    FiniteSpace space;
    FiniteFrame coproduct;
    /// Checks: compact, dV-space, homeomorphic-to-uv.
    Verdict verdict;
};

/// Throws PreconditionError unless every input is discrete (the finite
/// compact Hausdorff spaces). The empty family gives Ξ of the 2-element
/// lattice.
ChoiceFreeProduct choice_free_product(const std::vector<FiniteSpace>& spaces);

}  // namespace dv

#endif  // DV_FRAME_CONSTRUCTIONS_HPP
