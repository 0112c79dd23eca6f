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

#ifndef DV_BOOLEAN_ALGEBRA_HPP
#define DV_BOOLEAN_ALGEBRA_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dv {

/// An element of a finite Boolean algebra, encoded as the set of atoms below
/// it (bit i set iff atom i is below the element). The encoding is also the
/// element's index, and ascending encoding is the canonical element order.
class Element {
public:
    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t bits) : bits_(bits) {}

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr std::size_t index() const noexcept { return bits_; }

    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;

private:
    std::uint32_t bits_ = 0;
};

/// A set of elements of an algebra with at most 64 elements, as a bitmask over
/// element indices.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}

    constexpr bool contains(Element e) const noexcept { return (mask_ >> e.index()) & 1U; }
    constexpr void insert(Element e) noexcept { mask_ |= std::uint64_t{1} << e.index(); }
    constexpr void erase(Element e) noexcept { mask_ &= ~(std::uint64_t{1} << e.index()); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr std::uint64_t mask() const noexcept { return mask_; }

    constexpr bool subset_of(ElementSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    /// Members in ascending encoding order.
    std::vector<Element> elements() const {
        std::vector<Element> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
            out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        }
        return out;
    }

    friend constexpr bool operator==(ElementSet, ElementSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// The finite Boolean algebra of subsets of {0, ..., n-1}; order is inclusion,
/// meet is intersection, join is union, complement is relative complement.
/// Atoms carry display names used by the text formats.
class FiniteBooleanAlgebra {
public:
    /// Elements must fit an ElementSet, so at most 2^6 of them.
    static constexpr unsigned kMaxAtoms = 6;

    /// Algebra on `atom_count` atoms named p, q, r, s, t, u.
    explicit FiniteBooleanAlgebra(unsigned atom_count = 0);
    /// Algebra whose atoms carry the given distinct, non-empty names.
    explicit FiniteBooleanAlgebra(std::vector<std::string> atom_names);

    unsigned atom_count() const noexcept { return static_cast<unsigned>(names_.size()); }
    std::size_t size() const noexcept { return std::size_t{1} << names_.size(); }
    const std::vector<std::string>& atom_names() const noexcept { return names_; }

    Element bottom() const noexcept { return Element{0}; }
    Element top() const noexcept { return Element{static_cast<std::uint32_t>(size() - 1)}; }
    Element atom(unsigned i) const;
    /// Element with the given index; throws InputError when out of range.
    Element element(std::size_t index) const;
    std::vector<Element> elements() const;
    /// All elements as an ElementSet.
    ElementSet all() const noexcept;

    bool contains(Element e) const noexcept { return e.index() < size(); }
    /// Throws InputError unless `e` belongs to this algebra.
    void check(Element e) const;

    Element meet(Element a, Element b) const;
    Element join(Element a, Element b) const;
    Element complement(Element a) const;
    bool leq(Element a, Element b) const;
    /// Join of an arbitrary finite family; the empty join is 0.
    Element join_all(std::span<const Element> family) const;
    /// Meet of an arbitrary finite family; the empty meet is 1.
    Element meet_all(std::span<const Element> family) const;
    Element join_all(ElementSet family) const;
    Element meet_all(ElementSet family) const;

    /// `{a,b}` notation with `0` and `1` as abbreviations for bottom and top.
    std::string format(Element e) const;
    /// Identifier-friendly name: `0`, `1`, or atom names joined by `+`.
    std::string compact_name(Element e) const;
    /// Parses the `format` notation (also accepts `{}` for 0).
    Element parse_element(std::string_view text) const;

    friend bool operator==(const FiniteBooleanAlgebra&, const FiniteBooleanAlgebra&) = default;

private:
    std::vector<std::string> names_;
};

enum class ElementOp { meet, join, complement, leq, join_all, meet_all };

/// Uniform entry point over the Boolean operations; argument count must match
/// the operation's arity (join_all / meet_all take any number).
std::variant<Element, bool> apply(const FiniteBooleanAlgebra& alg, ElementOp op, std::span<const Element> args);

}  // namespace dv

#endif  // DV_BOOLEAN_ALGEBRA_HPP
