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

#ifndef DV_S2IC_FORMULA_HPP
#define DV_S2IC_FORMULA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace dv::s2ic {

enum class Connective { variable, bottom, top, negation, conjunction, disjunction, implication, strict };

/// A formula tree. Variables carry a name; the other nodes carry their
/// operands in `args` (one for negation, two for the binary connectives).
struct Formula {
    Connective op = Connective::bottom;
    std::string name;
    std::vector<Formula> args;

    static Formula var(std::string name);
    static Formula bottom();
    static Formula top();
    static Formula neg(Formula a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    /// a ⇝ b
    static Formula strict(Formula a, Formula b);

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Grammar:
///   phi ::= ident | "0" | "1" | "(" phi ")" | "~" phi | phi "&" phi
///         | phi "|" phi | phi "->" phi | phi "=>" phi
/// with ~ binding tightest, then &, |, -> and => loosest. & and | group to the
/// left, -> and => to the right. Identifiers match [a-z][a-z0-9_]*. Throws
/// ParseError with a 1-based line and column.
Formula parse(std::string_view text);

/// ASCII form with only the parentheses the grammar needs, so that
/// parse(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Variable names in ascending order, without repeats.
std::vector<std::string> variables(const Formula& f);

/// Number of nodes in the tree.
std::size_t size(const Formula& f);

}  // namespace dv::s2ic

#endif  // DV_S2IC_FORMULA_HPP
