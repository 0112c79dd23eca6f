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

#ifndef DV_SPACE_HPP
#define DV_SPACE_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dv {

/// A subset of the points of a space with at most 64 points, as a bitmask
/// over point indices. Ascending mask is the canonical subset order.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t mask) : mask_(mask) {}

    static constexpr PointSet single(std::size_t point) { return PointSet{std::uint64_t{1} << point}; }
    /// {0, ..., n-1}
    static constexpr PointSet first(std::size_t n) {
        return PointSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool contains(std::size_t point) const noexcept { return (mask_ >> point) & 1U; }
    constexpr bool subset_of(PointSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    constexpr bool disjoint(PointSet other) const noexcept { return (mask_ & other.mask_) == 0; }
    constexpr void insert(std::size_t point) noexcept { mask_ |= std::uint64_t{1} << point; }

    constexpr PointSet operator|(PointSet o) const noexcept { return PointSet{mask_ | o.mask_}; }
    constexpr PointSet operator&(PointSet o) const noexcept { return PointSet{mask_ & o.mask_}; }
    /// Set difference.
    constexpr PointSet operator-(PointSet o) const noexcept { return PointSet{mask_ & ~o.mask_}; }
    constexpr PointSet& operator|=(PointSet o) noexcept {
        mask_ |= o.mask_;
        return *this;
    }
    constexpr PointSet& operator&=(PointSet o) noexcept {
        mask_ &= o.mask_;
        return *this;
    }

    /// Member indices, ascending.
    std::vector<std::size_t> points() const {
        std::vector<std::size_t> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        return out;
    }

    friend constexpr bool operator==(PointSet, PointSet) = default;
    friend constexpr auto operator<=>(PointSet, PointSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// A finite topological space given by its point names and its full family of
/// open sets. Construction validates that the family contains ∅ and the whole
/// space and is closed under binary unions and intersections.
class FiniteSpace {
public:
    static constexpr std::size_t kMaxPoints = 64;

    /// The empty space.
    FiniteSpace();
    FiniteSpace(std::vector<std::string> point_names, std::vector<PointSet> opens);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& point_names() const noexcept { return names_; }
    const std::string& name(std::size_t point) const { return names_.at(point); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    PointSet full() const noexcept { return PointSet::first(names_.size()); }
    /// Opens in ascending mask order.
    const std::vector<PointSet>& opens() const noexcept { return opens_; }
    /// Complements of the opens, ascending.
    std::vector<PointSet> closed_sets() const;

    bool is_open(PointSet set) const;
    bool is_closed(PointSet set) const { return is_open(complement(set)); }
    PointSet complement(PointSet set) const noexcept { return full() - set; }

    /// Union of the opens contained in `set`.
    PointSet interior(PointSet set) const;
    /// Complement of the union of the opens disjoint from `set`.
    PointSet closure(PointSet set) const;
    /// U^⊥ = −closure(U).
    PointSet perp(PointSet set) const { return complement(closure(set)); }
    /// Intersection of the opens containing `set`.
    PointSet smallest_open_containing(PointSet set) const;

    /// Specialization preorder: x ≤ y iff every open containing x contains y.
    bool specialization_leq(std::size_t x, std::size_t y) const;
    /// Downward closure in the specialization preorder.
    PointSet down(PointSet set) const;
    /// Upward closure in the specialization preorder.
    PointSet up(PointSet set) const;
    /// ⤊U: the largest upward-closed subset of U.
    PointSet up_interior(PointSet set) const;

    /// `{a,b}` using point names.
    std::string format(PointSet set) const;

    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

private:
    std::vector<std::string> names_;
    std::vector<PointSet> opens_;
    // Smallest open neighbourhood of each point.
    std::vector<PointSet> neighbourhood_;
};

/// Topology generated by `subbasis`: closes under finite intersections and
/// unions and adds ∅ and the whole space.
FiniteSpace generate_topology(std::vector<std::string> point_names, const std::vector<PointSet>& subbasis);

/// Every subset open. Points named x0, x1, ... unless names are given.
FiniteSpace discrete_space(std::size_t n);
FiniteSpace discrete_space(std::vector<std::string> point_names);

/// Product topology; point (i, j) has index i * |Y| + j and name `x*y`.
FiniteSpace product_space(const FiniteSpace& x, const FiniteSpace& y);

/// True when every open (of `space`) is a union of members of `basis`.
bool is_basis(const FiniteSpace& space, const std::vector<PointSet>& basis);

/// Searches for a homeomorphism X → Y and returns it as the image of each point
/// of X. Uses the specialization preorder for pruning and confirms the
/// candidate by mapping the whole open family.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y);

/// Checks that `map` (image of each point of X) is a bijection mapping the
/// opens of X onto the opens of Y.
bool is_homeomorphism(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& map);

}  // namespace dv

#endif  // DV_SPACE_HPP
