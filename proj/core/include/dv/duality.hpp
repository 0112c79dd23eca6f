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

#ifndef DV_DUALITY_HPP
#define DV_DUALITY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dv/filters.hpp"
#include "dv/space.hpp"
#include "dv/subordination.hpp"
#include "dv/topology.hpp"
#include "dv/verdict.hpp"

namespace dv {

/// The dual filter space of a subordination algebra together with the data
/// needed to move between the two sides.
struct DualSpace {
    FiniteSpace space;
    /// Concordant filters in ascending generator order; point i is points[i].
    std::vector<Filter> points;
    /// hat[a] = {F | a ∈ F}, indexed by element encoding.
    std::vector<PointSet> hat;

    PointSet hat_of(Element a) const { return hat.at(a.index()); }
    std::optional<std::size_t> point_of(Filter f) const;
};

/// Points are the concordant filters, named `F` followed by the compact name
/// of the generator (`F1`, `Fp`, `Fp+q`); the topology is generated by the
/// sets â.
DualSpace lambda_space(const SubordinationAlgebra& v);

/// (RO(X), ≪) in the atom encoding of RegularOpenAlgebra.
SubordinationAlgebra phi_algebra(const FiniteSpace& x);

struct Representation {
    /// Checks: hat-bijection, zero-one, basic-i, basic-ii, basic-iii,
    /// basic-iv, basic-v, prox.
    Verdict verdict;
    /// The witness map a ↦ â.
    DualSpace dual;
};

/// Verifies that a ↦ â is an isomorphism of V onto (RO(S_V), ≪) along with
/// the elementwise identities behind it. Throws PreconditionError unless V
/// is compingent.
Representation verify_representation(const SubordinationAlgebra& v);

struct SpaceRoundtrip {
    /// Checks: well-defined, bijection, homeomorphism, hat-correspondence.
    Verdict verdict;
    /// Image of each point x of X, i.e. the index of RO(x) in the dual.
    std::vector<std::size_t> map;
    DualSpace dual;
};

/// Verifies that x ↦ RO(x) is a homeomorphism X → Λ(Φ(X)). Throws
/// PreconditionError unless X is a dV-space.
SpaceRoundtrip verify_space_roundtrip(const FiniteSpace& x);

}  // namespace dv

#endif  // DV_DUALITY_HPP
