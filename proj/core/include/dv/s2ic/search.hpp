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

#ifndef DV_S2IC_SEARCH_HPP
#define DV_S2IC_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dv/s2ic/formula.hpp"
#include "dv/s2ic/semantics.hpp"
#include "dv/subordination.hpp"

namespace dv::s2ic {

/// Which tables the search admits; each is checked with check_axioms.
enum class ModelClass { subordination, contact, compingent };

std::string to_string(ModelClass c);
/// Accepts `subordination`, `contact`, `compingent`; throws InputError.
ModelClass parse_model_class(const std::string& text);

inline constexpr unsigned kMaxSearchAtoms = 3;

/// Every table of the class on the n-atom algebra (atoms p, q, r), sorted by
/// table_lex_less. A table satisfying the subordination axioms is fixed by
/// the relation R on atoms with a ≺ b iff R[a] ⊆ b, so candidates are built
/// from the 2^(n·n) atom relations and then filtered.
std::vector<SubordinationAlgebra> class_tables(unsigned atoms, ModelClass c);

struct Countermodel {
    SubordinationAlgebra algebra;
    AlgebraicValuation valuation;
    Element value;
};

struct SearchResult {
    std::optional<Countermodel> countermodel;
    unsigned max_atoms = 0;
    /// Tables visited in enumeration order up to and including the
    /// countermodel's table (all tables when exhausted).
    std::size_t tables_examined = 0;
};

/// First model (atom count ascending, then table order, then valuation order
/// as in is_valid_on_algebra) where the formula is not 1. With jobs > 1 the
/// tables are shared among worker threads and the canonically least hit
/// wins, so the result does not depend on `jobs`. Throws InputError when
/// max_atoms exceeds kMaxSearchAtoms.
SearchResult countermodel_search(const Formula& f, unsigned max_atoms, ModelClass c, unsigned jobs = 1);

}  // namespace dv::s2ic

#endif  // DV_S2IC_SEARCH_HPP
