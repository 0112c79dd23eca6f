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

#ifndef DV_IO_FORMATS_HPP
#define DV_IO_FORMATS_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "dv/frame.hpp"
#include "dv/morphism.hpp"
#include "dv/s2ic/semantics.hpp"
#include "dv/space.hpp"
#include "dv/subordination.hpp"

// Line-oriented text formats. Every format ignores blank lines and anything
// after '#', and reports problems as ParseError with a line and column.
namespace dv::io {

/// Whole file as a string; InputError when it cannot be read.
std::string read_file(const std::filesystem::path& path);

/// `atoms: a b c` followed by `prec: leq` or `prec: X Y` lines, one related
/// pair per line, X and Y in `{a,b}` notation with 0 and 1 allowed.
SubordinationAlgebra parse_algebra(std::string_view text);
SubordinationAlgebra read_algebra(const std::filesystem::path& path);
/// Emits `prec: leq` when ≺ = ≤, otherwise every related pair in canonical
/// order.
std::string format_algebra(const SubordinationAlgebra& alg);

/// `points: a b c` followed by one `open: a b` line per open. With
/// `generate` the open lines are a subbasis and are closed up.
FiniteSpace parse_space(std::string_view text, bool generate = false);
FiniteSpace read_space(const std::filesystem::path& path, bool generate = false);
std::string format_space(const FiniteSpace& space);

/// `elements: a b c` then `leq: a b` lines; optional `bottom: a` and
/// `top: b` lines must name the actual bounds.
FiniteFrame parse_frame(std::string_view text);
FiniteFrame read_frame(const std::filesystem::path& path);
/// Elements and the covering pairs of the order.
std::string format_frame(const FiniteFrame& frame);

using AlgebraLoader = std::function<SubordinationAlgebra(const std::string&)>;
using SpaceLoader = std::function<FiniteSpace(const std::string&)>;

/// `source: FILE`, `target: FILE`, then `map: X Y` for every source element.
/// The loader resolves the header names.
MorphismTable parse_morphism(std::string_view text, const AlgebraLoader& load);
/// Header files are resolved relative to the morphism file.
MorphismTable read_morphism(const std::filesystem::path& path);
std::string format_morphism(const MorphismTable& h, const std::string& source_name, const std::string& target_name);

/// As for morphisms, with `map: x y` naming points.
PointMap parse_point_map(std::string_view text, const SpaceLoader& load);
PointMap read_point_map(const std::filesystem::path& path);
std::string format_point_map(const PointMap& f, const std::string& source_name, const std::string& target_name);

/// `val: p {a,b}` lines.
s2ic::AlgebraicValuation parse_algebraic_valuation(std::string_view text, const FiniteBooleanAlgebra& alg);
/// `val: p open: x y` lines.
s2ic::TopologicalValuation parse_topological_valuation(std::string_view text, const FiniteSpace& space);

}  // namespace dv::io

#endif  // DV_IO_FORMATS_HPP
