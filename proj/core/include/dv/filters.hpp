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

#ifndef DV_FILTERS_HPP
#define DV_FILTERS_HPP

#include <optional>
#include <vector>

#include "dv/boolean_algebra.hpp"
#include "dv/subordination.hpp"

namespace dv {

/// The principal filter ↑generator. Every filter on a finite lattice is
/// principal, so the generator determines it. Proper means generator ≠ 0; the
/// unit filter {1} is proper.
class Filter {
public:
    constexpr explicit Filter(Element generator) : generator_(generator) {}

    constexpr Element generator() const noexcept { return generator_; }
    constexpr bool proper() const noexcept { return generator_.bits() != 0; }
    constexpr bool contains(Element a) const noexcept { return (generator_.bits() & ~a.bits()) == 0; }
    /// Inclusion of filters: ↑g ⊆ ↑h iff h ≤ g.
    constexpr bool subset_of(Filter other) const noexcept { return other.contains(generator_); }

    ElementSet members(const FiniteBooleanAlgebra& alg) const;

    friend constexpr bool operator==(Filter, Filter) = default;
    friend constexpr auto operator<=>(Filter, Filter) = default;

private:
    Element generator_;
};

/// The principal ideal ↓generator; proper iff generator ≠ 1.
class Ideal {
public:
    constexpr explicit Ideal(Element generator) : generator_(generator) {}

    constexpr Element generator() const noexcept { return generator_; }
    bool proper(const FiniteBooleanAlgebra& alg) const { return generator_ != alg.top(); }
    constexpr bool contains(Element a) const noexcept { return (a.bits() & ~generator_.bits()) == 0; }

    ElementSet members(const FiniteBooleanAlgebra& alg) const;

    friend constexpr bool operator==(Ideal, Ideal) = default;
    friend constexpr auto operator<=>(Ideal, Ideal) = default;

private:
    Element generator_;
};

/// Recognizes a proper filter given extensionally: returns ↑(meet S) when S is
/// nonempty, upward closed, closed under meets and avoids 0.
std::optional<Filter> as_filter(const FiniteBooleanAlgebra& alg, ElementSet set);

/// ↠F = {a ∈ F | ∃ b ∈ F, b ≺ a}.
ElementSet round_part(const SubordinationAlgebra& alg, Filter f);
bool is_concordant(const SubordinationAlgebra& alg, Filter f);
/// Concordant proper filters in ascending generator order.
std::vector<Filter> concordant_filters(const SubordinationAlgebra& alg);
/// Inclusion-maximal concordant filters.
std::vector<Filter> ends(const SubordinationAlgebra& alg);

/// Every member is subordinate to some member: ∀a ∈ I ∃b ∈ I, a ≺ b.
bool is_round(const SubordinationAlgebra& alg, Ideal ideal);
/// Round principal ideals, including ↓1, in ascending generator order.
std::vector<Ideal> round_ideals(const SubordinationAlgebra& alg);

/// I^δ = {¬a | a ∈ I} = ↑¬generator. Throws InputError for the improper ideal.
Filter dual_filter(const FiniteBooleanAlgebra& alg, Ideal ideal);

/// {c | a ≺ c}. Throws InputError when a = 0.
ElementSet filter_from_element(const SubordinationAlgebra& alg, Element a);

/// {c ∧ d | c ∈ F, d ∈ G}, computed from the definition.
ElementSet meet_set(const FiniteBooleanAlgebra& alg, Filter f, Filter g);
/// ↑(gen F ∧ gen G). Throws PreconditionError when the generators meet to 0 or
/// either filter is not concordant.
Filter concordant_meet(const SubordinationAlgebra& alg, Filter f, Filter g);

/// Result of the extension G = {c ∧ d | c ∈ F, ¬a ≺ d} together with the
/// properties it is supposed to have.
struct RegExtension {
    Filter extension{Element{0}};
    bool concordant = false;
    bool extends_original = false;
    /// No concordant H ⊇ G contains a.
    bool excludes_element = false;

    bool verified() const { return concordant && extends_original && excludes_element; }
};

/// Requires a compingent algebra, F concordant and a ∉ F; otherwise throws
/// PreconditionError.
RegExtension reg_extension(const SubordinationAlgebra& alg, Filter f, Element a);

}  // namespace dv

#endif  // DV_FILTERS_HPP
