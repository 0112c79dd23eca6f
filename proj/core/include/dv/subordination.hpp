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

#ifndef DV_SUBORDINATION_HPP
#define DV_SUBORDINATION_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dv/boolean_algebra.hpp"

namespace dv {

/// A finite Boolean algebra together with an arbitrary binary relation on its
/// elements, stored extensionally: row a is the set {b | a ≺ b}.
class SubordinationAlgebra {
public:
    /// The degenerate algebra (0 = 1) with 0 ≺ 0.
    SubordinationAlgebra();
    /// `rows[a]` is the bitmask of elements b with a ≺ b.
    SubordinationAlgebra(FiniteBooleanAlgebra base, std::vector<std::uint64_t> rows);

    /// ≺ = ≤.
    static SubordinationAlgebra order(FiniteBooleanAlgebra base);
    /// a ≺ b iff a = 0 or b = 1.
    static SubordinationAlgebra trivial(FiniteBooleanAlgebra base);
    static SubordinationAlgebra from_predicate(FiniteBooleanAlgebra base,
                                               const std::function<bool(Element, Element)>& related);

    const FiniteBooleanAlgebra& base() const noexcept { return base_; }
    bool prec(Element a, Element b) const;
    /// {b | a ≺ b}
    ElementSet above(Element a) const;
    /// {a | a ≺ b}
    ElementSet below(Element b) const;
    const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }

    /// Same atom count and relation table; atom names are ignored.
    bool same_structure(const SubordinationAlgebra& other) const;

    friend bool operator==(const SubordinationAlgebra&, const SubordinationAlgebra&) = default;

private:
    FiniteBooleanAlgebra base_;
    std::vector<std::uint64_t> rows_;
};

/// Lexicographic order on the row-major bit string of the relation tables
/// (row 0 first, column 0 first, unrelated < related). Tables of different
/// sizes order by atom count first.
bool table_lex_less(const SubordinationAlgebra& x, const SubordinationAlgebra& y);

enum class Axiom { A1, A2, A3, A4, A5, A6, A7, zero_dimensional };

inline constexpr std::array<Axiom, 8> kAllAxioms = {Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4,
                                                    Axiom::A5, Axiom::A6, Axiom::A7, Axiom::zero_dimensional};

std::string to_string(Axiom axiom);

/// Verdict for one axiom. A failing axiom carries the lexicographically least
/// counterexample tuple, with elements in the order they appear in the axiom:
///   A1 (1, 1); A2 (a, b); A3 (a, b, c, d); A4 (a, b, c); A5 (a, b);
///   A6 (a, c); A7 (a); zero-dimensionality (a, b).
struct AxiomCheck {
    Axiom axiom = Axiom::A1;
    bool holds = true;
    std::vector<Element> witness;
};

struct AxiomReport {
    std::array<AxiomCheck, 8> checks{};

    const AxiomCheck& operator[](Axiom axiom) const { return checks[static_cast<std::size_t>(axiom)]; }
    bool holds(Axiom axiom) const { return (*this)[axiom].holds; }
    /// A1–A5.
    bool contact() const;
    /// A1–A7.
    bool compingent() const;
};

AxiomReport check_axioms(const SubordinationAlgebra& alg);

/// Ordered from weakest to strongest; `classify` returns the finest class
/// whose axioms all hold.
enum class Classification {
    none,
    /// 0 ≺ 0, 1 ≺ 1, A3, A4 and a ≺ c, b ≺ c ⇒ a ∨ b ≺ c.
    subordination,
    /// A1–A5.
    contact,
    /// A1–A7.
    compingent,
    /// Compingent and complete; every finite compingent algebra qualifies.
    de_vries,
    zero_dimensional_de_vries,
};

std::string to_string(Classification c);

Classification classify(const SubordinationAlgebra& alg);
Classification classify(const AxiomReport& report, const SubordinationAlgebra& alg);

/// True when `c` is at least as strong as `floor` in the chain above.
inline bool at_least(Classification c, Classification floor) {
    return static_cast<int>(c) >= static_cast<int>(floor);
}

}  // namespace dv

#endif  // DV_SUBORDINATION_HPP
