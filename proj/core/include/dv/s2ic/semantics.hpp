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

#ifndef DV_S2IC_SEMANTICS_HPP
#define DV_S2IC_SEMANTICS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "dv/boolean_algebra.hpp"
#include "dv/s2ic/formula.hpp"
#include "dv/space.hpp"
#include "dv/subordination.hpp"
#include "dv/verdict.hpp"

namespace dv::s2ic {

using AlgebraicValuation = std::map<std::string, Element>;
using TopologicalValuation = std::map<std::string, PointSet>;

/// a ⇝ b = 1 if a ≺ b and 0 otherwise.
Element strict_value(const SubordinationAlgebra& alg, Element a, Element b);
/// Δ(a, b) = ¬(a ⇝ ¬b).
Element delta(const SubordinationAlgebra& alg, Element a, Element b);

/// Boolean connectives as usual, ⇝ by strict_value. Throws InputError for an
/// unbound variable or a value outside the algebra.
Element eval_algebraic(const SubordinationAlgebra& alg, const AlgebraicValuation& v, const Formula& f);

/// Values in RO(X): ¬ is U^⊥, ∧ is ∩, ∨ is (U ∪ V)^⊥⊥, → is (U^⊥ ∪ V)^⊥⊥ and
/// U ⇝ V is X when cl U ⊆ ↓V and ∅ otherwise. Throws InputError when the
/// valuation is unbound or not regular open, and Error if a subformula ever
/// leaves RO(X).
PointSet eval_topological(const FiniteSpace& x, const TopologicalValuation& v, const Formula& f);

struct ValidityResult {
    bool valid = true;
    /// First valuation (canonical order) with V(φ) ≠ X.
    std::optional<TopologicalValuation> countervaluation;
    PointSet counter_value;
    std::size_t valuations_checked = 0;
};

/// Quantifies over every RO(X)-valuation of the formula's variables. Variables
/// are taken in ascending name order with the first one most significant, and
/// each ranges over RO(X) in ascending mask order. Throws PreconditionError
/// unless X is a dV-space.
ValidityResult is_valid_on_space(const FiniteSpace& x, const Formula& f);

/// Same quantification over the elements of an algebra: valid iff the value
/// is 1 under every valuation.
struct AlgebraicValidity {
    bool valid = true;
    std::optional<AlgebraicValuation> countervaluation;
    Element counter_value;
    std::size_t valuations_checked = 0;
};
AlgebraicValidity is_valid_on_algebra(const SubordinationAlgebra& alg, const Formula& f);

struct Agreement {
    /// Checks: agreement (value 1 iff value X under the transported
    /// valuation), transport (the spatial value is the hat of the algebraic
    /// value).
    Verdict verdict;
    std::size_t valuations_checked = 0;
};

/// Transports each algebraic valuation along a ↦ â into Λ(V). Throws
/// PreconditionError unless V is compingent.
Agreement semantics_agreement(const SubordinationAlgebra& v, const Formula& f);

/// `p=q, r=0` style rendering.
std::string format_valuation(const FiniteBooleanAlgebra& alg, const AlgebraicValuation& v);
std::string format_valuation(const FiniteSpace& x, const TopologicalValuation& v);

}  // namespace dv::s2ic

#endif  // DV_S2IC_SEMANTICS_HPP
