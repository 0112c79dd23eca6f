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

#include "dv/boolean_algebra.hpp"

#include <algorithm>
#include <set>

#include "dv/error.hpp"

namespace dv {

namespace {

const char* const kDefaultNames[] = {"p", "q", "r", "s", "t", "u"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

FiniteBooleanAlgebra::FiniteBooleanAlgebra(unsigned atom_count) {
    if (atom_count > kMaxAtoms) {
        throw InputError("algebra with " + std::to_string(atom_count) + " atoms exceeds the limit of " +
                         std::to_string(kMaxAtoms));
    }
    names_.assign(kDefaultNames, kDefaultNames + atom_count);
}

FiniteBooleanAlgebra::FiniteBooleanAlgebra(std::vector<std::string> atom_names) : names_(std::move(atom_names)) {
    if (names_.size() > kMaxAtoms) {
        throw InputError("algebra with " + std::to_string(names_.size()) + " atoms exceeds the limit of " +
                         std::to_string(kMaxAtoms));
    }
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || n == "0" || n == "1") throw InputError("invalid atom name '" + n + "'");
        if (n.find_first_of("{}, \t") != std::string::npos) throw InputError("invalid atom name '" + n + "'");
        if (!seen.insert(n).second) throw InputError("duplicate atom name '" + n + "'");
    }
}

Element FiniteBooleanAlgebra::atom(unsigned i) const {
    if (i >= atom_count()) throw InputError("atom index " + std::to_string(i) + " out of range");
    return Element{std::uint32_t{1} << i};
}

Element FiniteBooleanAlgebra::element(std::size_t index) const {
    if (index >= size()) throw InputError("element index " + std::to_string(index) + " out of range");
    return Element{static_cast<std::uint32_t>(index)};
}

std::vector<Element> FiniteBooleanAlgebra::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.emplace_back(static_cast<std::uint32_t>(i));
    return out;
}

ElementSet FiniteBooleanAlgebra::all() const noexcept {
    return ElementSet{size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1};
}

void FiniteBooleanAlgebra::check(Element e) const {
    if (!contains(e)) {
        throw InputError("element " + std::to_string(e.bits()) + " is not in an algebra with " +
                         std::to_string(atom_count()) + " atoms");
    }
}

Element FiniteBooleanAlgebra::meet(Element a, Element b) const {
    check(a);
    check(b);
    return Element{a.bits() & b.bits()};
}

Element FiniteBooleanAlgebra::join(Element a, Element b) const {
    check(a);
    check(b);
    return Element{a.bits() | b.bits()};
}

Element FiniteBooleanAlgebra::complement(Element a) const {
    check(a);
    return Element{top().bits() & ~a.bits()};
}

bool FiniteBooleanAlgebra::leq(Element a, Element b) const {
    check(a);
    check(b);
    return (a.bits() & ~b.bits()) == 0;
}

Element FiniteBooleanAlgebra::join_all(std::span<const Element> family) const {
    std::uint32_t bits = 0;
    for (Element e : family) {
        check(e);
        bits |= e.bits();
    }
    return Element{bits};
}

Element FiniteBooleanAlgebra::meet_all(std::span<const Element> family) const {
    std::uint32_t bits = top().bits();
    for (Element e : family) {
        check(e);
        bits &= e.bits();
    }
    return Element{bits};
}

Element FiniteBooleanAlgebra::join_all(ElementSet family) const {
    const auto members = family.elements();
    return join_all(std::span<const Element>(members));
}

Element FiniteBooleanAlgebra::meet_all(ElementSet family) const {
    const auto members = family.elements();
    return meet_all(std::span<const Element>(members));
}

std::string FiniteBooleanAlgebra::format(Element e) const {
    check(e);
    if (e == bottom()) return "0";
    if (e == top()) return "1";
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < atom_count(); ++i) {
        if ((e.bits() >> i) & 1U) {
            if (!first) out += ',';
            out += names_[i];
            first = false;
        }
    }
    return out + "}";
}

std::string FiniteBooleanAlgebra::compact_name(Element e) const {
    check(e);
    if (e == bottom()) return "0";
    if (e == top()) return "1";
    std::string out;
    for (unsigned i = 0; i < atom_count(); ++i) {
        if ((e.bits() >> i) & 1U) {
            if (!out.empty()) out += '+';
            out += names_[i];
        }
    }
    return out;
}

Element FiniteBooleanAlgebra::parse_element(std::string_view text) const {
    text = trim(text);
    if (text == "0") return bottom();
    if (text == "1") return top();
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw InputError("malformed element '" + std::string(text) + "' (expected {a,b}, 0 or 1)");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    std::uint32_t bits = 0;
    if (trim(body).empty()) return Element{0};
    while (true) {
        const auto comma = body.find(',');
        const std::string_view name = trim(body.substr(0, comma));
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) throw InputError("unknown atom '" + std::string(name) + "'");
        bits |= std::uint32_t{1} << static_cast<unsigned>(it - names_.begin());
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return Element{bits};
}

std::variant<Element, bool> apply(const FiniteBooleanAlgebra& alg, ElementOp op, std::span<const Element> args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw InputError("operation expects " + std::to_string(n) + " argument(s)");
    };
    switch (op) {
        case ElementOp::meet:
            need(2);
            return alg.meet(args[0], args[1]);
        case ElementOp::join:
            need(2);
            return alg.join(args[0], args[1]);
        case ElementOp::complement:
            need(1);
            return alg.complement(args[0]);
        case ElementOp::leq:
            need(2);
            return alg.leq(args[0], args[1]);
        case ElementOp::join_all:
            return alg.join_all(args);
        case ElementOp::meet_all:
            return alg.meet_all(args);
    }
    throw InputError("unknown element operation");
}

}  // namespace dv
