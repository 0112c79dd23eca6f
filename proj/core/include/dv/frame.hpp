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

#ifndef DV_FRAME_HPP
#define DV_FRAME_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dv/space.hpp"
#include "dv/verdict.hpp"

namespace dv {

/// A finite bounded lattice with named elements, held by index. Whether it is
/// distributive (hence a frame) is reported by check_frame, not assumed.
class FiniteFrame {
public:
    /// The reflexive-transitive closure of `leq_pairs` must be a partial order
    /// in which every pair has a meet and a join; throws InputError otherwise.
    FiniteFrame(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);

    static FiniteFrame from_order(std::vector<std::string> names,
                                  const std::function<bool(std::size_t, std::size_t)>& leq);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t a) const { return names_.at(a); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    std::size_t join_all(const std::vector<std::size_t>& family) const;
    /// ¬a = ⋁{b | a ∧ b = 0}.
    std::size_t pseudo_complement(std::size_t a) const { return neg_[a]; }
    /// a ≺ b iff b ∨ ¬a = 1.
    bool rather_below(std::size_t a, std::size_t b) const { return join(b, neg_[a]) == top_; }

    /// Elements other than the top, ascending by index.
    std::vector<std::size_t> non_top() const;

    friend bool operator==(const FiniteFrame&, const FiniteFrame&) = default;

private:
    void build();

    std::vector<std::string> names_;
    std::vector<std::uint8_t> leq_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
    std::vector<std::size_t> neg_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

struct FrameReport {
    CheckResult is_frame{"frame", true, {}};
    CheckResult is_compact{"compact", true, {}};
    CheckResult is_regular{"regular", true, {}};
    /// rather_below[a][b]
    std::vector<std::vector<bool>> rather_below;

    bool compact_regular() const { return is_frame.passed && is_compact.passed && is_regular.passed; }
    Verdict to_verdict() const;
};

FrameReport check_frame(const FiniteFrame& l);

/// Order isomorphism L1 → L2 as the image of each element, found by
/// backtracking over elements with matching up/down degrees.
std::optional<std::vector<std::size_t>> find_order_isomorphism(const FiniteFrame& l1, const FiniteFrame& l2);
bool is_order_isomorphism(const FiniteFrame& l1, const FiniteFrame& l2, const std::vector<std::size_t>& map);

/// The powerset of {0, ..., k-1}; element i is the subset with bitmask i and
/// is named `0`, `1` or by its members joined with `+` (atoms a, b, c, ...).
FiniteFrame boolean_lattice(unsigned k);
/// The chain 0 < 1 < ... < n-1.
FiniteFrame chain(std::size_t n);

/// Opens of X under inclusion, element i being opens()[i].
FiniteFrame omega(const FiniteSpace& x);

/// Completely prime filters ↑a for join-prime a ≠ 0, named after a, with opens
/// U_b = {↑a | a ≤ b}.
FiniteSpace frame_points(const FiniteFrame& l);
/// Join-prime nonzero elements in index order (the generators of the points).
std::vector<std::size_t> join_prime_elements(const FiniteFrame& l);

/// Ω(pt L1 × pt L2).
FiniteFrame frame_coproduct(const FiniteFrame& l1, const FiniteFrame& l2);

}  // namespace dv

#endif  // DV_FRAME_HPP
