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

#include "dv/io/formats.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "dv/error.hpp"

namespace dv::io {

namespace {

struct Field {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::string key;
    std::size_t key_column;
    std::vector<Field> fields;
};

[[noreturn]] void fail(const Line& l, const std::string& what, std::size_t column = 0) {
    throw ParseError(what, l.number, column == 0 ? l.key_column : column);
}

// Whitespace-separated fields, except that a `{...}` group stays one field.
std::vector<Field> split_fields(const std::string& s, std::size_t offset, std::size_t line) {
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (s[i] == '{') {
            std::string text;
            while (i < s.size() && s[i] != '}') {
                if (s[i] != ' ' && s[i] != '\t') text += s[i];
                ++i;
            }
            if (i == s.size()) throw ParseError("unterminated '{'", line, offset + start + 1);
            text += '}';
            ++i;
            out.push_back({text, offset + start + 1});
        } else {
            while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
            out.push_back({s.substr(start, i - start), offset + start + 1});
        }
    }
    return out;
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string raw(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            if (end == text.size()) break;
            continue;
        }
        const auto colon = raw.find(':', first);
        if (colon == std::string::npos) throw ParseError("expected 'keyword:'", number, first + 1);
        std::string key = raw.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        out.push_back({number, key, first + 1, split_fields(raw.substr(colon + 1), colon + 1, number)});
        if (end == text.size()) break;
    }
    return out;
}

const Line& expect_header(const std::vector<Line>& lines, const std::string& key) {
    if (lines.empty()) throw ParseError("empty input; expected '" + key + ":'", 1, 1);
    if (lines.front().key != key) fail(lines.front(), "expected '" + key + ":' on the first line");
    return lines.front();
}

std::vector<std::string> names_of(const Line& l) {
    std::vector<std::string> out;
    for (const auto& f : l.fields) out.push_back(f.text);
    return out;
}

Element element_at(const FiniteBooleanAlgebra& alg, const Line& l, const Field& f) {
    try {
        return alg.parse_element(f.text);
    } catch (const InputError& e) {
        fail(l, e.what(), f.column);
    }
}

std::size_t point_at(const FiniteSpace& x, const Line& l, const Field& f) {
    if (auto i = x.index_of(f.text)) return *i;
    fail(l, "unknown point '" + f.text + "'", f.column);
}

template <typename Fn>
auto rethrow_at(const Line& l, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        fail(l, e.what());
    }
}

std::filesystem::path sibling(const std::filesystem::path& of, const std::string& name) {
    const std::filesystem::path p(name);
    return p.is_absolute() ? p : of.parent_path() / p;
}

struct MapFile {
    std::string source;
    std::string target;
    std::vector<Line> maps;
};

MapFile split_map_file(std::string_view text) {
    MapFile out;
    std::optional<Line> source, target;
    for (const auto& l : split_lines(text)) {
        if (l.key == "source" || l.key == "target") {
            if (l.fields.size() != 1) fail(l, "expected one file name");
            (l.key == "source" ? source : target) = l;
        } else if (l.key == "map") {
            if (l.fields.size() != 2) fail(l, "expected 'map: X Y'");
            out.maps.push_back(l);
        } else {
            fail(l, "unknown keyword '" + l.key + "'");
        }
    }
    if (!source || !target) throw ParseError("missing 'source:' or 'target:' header", 1, 1);
    out.source = source->fields[0].text;
    out.target = target->fields[0].text;
    return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SubordinationAlgebra parse_algebra(std::string_view text) {
    const auto lines = split_lines(text);
    const Line& head = expect_header(lines, "atoms");
    const FiniteBooleanAlgebra base = rethrow_at(head, [&] { return FiniteBooleanAlgebra(names_of(head)); });
    std::vector<std::uint64_t> rows(base.size(), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.key != "prec") fail(l, "unknown keyword '" + l.key + "'");
        if (l.fields.size() == 1 && l.fields[0].text == "leq") {
            for (Element a : base.elements())
                for (Element b : base.elements())
                    if (base.leq(a, b)) rows[a.index()] |= std::uint64_t{1} << b.index();
            continue;
        }
        if (l.fields.size() != 2) fail(l, "expected 'prec: leq' or 'prec: X Y'");
        const Element a = element_at(base, l, l.fields[0]);
        const Element b = element_at(base, l, l.fields[1]);
        rows[a.index()] |= std::uint64_t{1} << b.index();
    }
    return SubordinationAlgebra(base, std::move(rows));
}

SubordinationAlgebra read_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

std::string format_algebra(const SubordinationAlgebra& alg) {
    const auto& base = alg.base();
    std::string out = "atoms:";
    for (const auto& n : base.atom_names()) out += " " + n;
    out += '\n';
    if (alg == SubordinationAlgebra::order(base)) return out + "prec: leq\n";
    for (Element a : base.elements())
        for (Element b : alg.above(a).elements()) out += "prec: " + base.format(a) + " " + base.format(b) + "\n";
    return out;
}

FiniteSpace parse_space(std::string_view text, bool generate) {
    const auto lines = split_lines(text);
    const Line& head = expect_header(lines, "points");
    std::vector<std::string> names = names_of(head);
    // Validates the names before they are looked up.
    const FiniteSpace bare = rethrow_at(head, [&] { return discrete_space(names); });
    std::vector<PointSet> opens;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.key != "open") fail(l, "unknown keyword '" + l.key + "'");
        PointSet u;
        for (const auto& f : l.fields) u.insert(point_at(bare, l, f));
        opens.push_back(u);
    }
    return rethrow_at(head, [&] {
        return generate ? generate_topology(std::move(names), opens) : FiniteSpace(std::move(names), std::move(opens));
    });
}

FiniteSpace read_space(const std::filesystem::path& path, bool generate) {
    return parse_space(read_file(path), generate);
}

std::string format_space(const FiniteSpace& space) {
    std::string out = "points:";
    for (const auto& n : space.point_names()) out += " " + n;
    out += '\n';
    for (PointSet u : space.opens()) {
        out += "open:";
        for (std::size_t p : u.points()) out += " " + space.name(p);
        out += '\n';
    }
    return out;
}

FiniteFrame parse_frame(std::string_view text) {
    const auto lines = split_lines(text);
    const Line& head = expect_header(lines, "elements");
    const std::vector<std::string> names = names_of(head);
    auto index = [&](const Line& l, const Field& f) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == f.text) return i;
        fail(l, "unknown element '" + f.text + "'", f.column);
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::pair<const Line*, std::size_t>> bounds;  // line, element; key says which
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.key == "leq") {
            if (l.fields.size() != 2) fail(l, "expected 'leq: a b'");
            pairs.emplace_back(index(l, l.fields[0]), index(l, l.fields[1]));
        } else if (l.key == "bottom" || l.key == "top") {
            if (l.fields.size() != 1) fail(l, "expected one element");
            bounds.emplace_back(&l, index(l, l.fields[0]));
        } else {
            fail(l, "unknown keyword '" + l.key + "'");
        }
    }
    FiniteFrame frame = rethrow_at(head, [&] { return FiniteFrame(names, pairs); });
    for (const auto& [l, e] : bounds) {
        const std::size_t actual = l->key == "bottom" ? frame.bottom() : frame.top();
        if (actual != e) fail(*l, l->key + " is '" + frame.name(actual) + "', not '" + frame.name(e) + "'");
    }
    return frame;
}

FiniteFrame read_frame(const std::filesystem::path& path) { return parse_frame(read_file(path)); }

std::string format_frame(const FiniteFrame& frame) {
    std::string out = "elements:";
    for (const auto& n : frame.names()) out += " " + n;
    out += '\n';
    const std::size_t n = frame.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !frame.leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                cover = c == a || c == b || !(frame.leq(a, c) && frame.leq(c, b));
            if (cover) out += "leq: " + frame.name(a) + " " + frame.name(b) + "\n";
        }
    }
    return out;
}

MorphismTable parse_morphism(std::string_view text, const AlgebraLoader& load) {
    const MapFile file = split_map_file(text);
    MorphismTable h{load(file.source), load(file.target), {}};
    const auto& src = h.source.base();
    std::vector<std::optional<Element>> image(src.size());
    for (const Line& l : file.maps) {
        const Element a = element_at(src, l, l.fields[0]);
        const Element b = element_at(h.target.base(), l, l.fields[1]);
        if (image[a.index()]) fail(l, "second 'map:' line for " + src.format(a), l.fields[0].column);
        image[a.index()] = b;
    }
    for (Element a : src.elements()) {
        if (!image[a.index()]) throw ParseError("no 'map:' line for " + src.format(a), 1, 1);
        h.image.push_back(*image[a.index()]);
    }
    return h;
}

MorphismTable read_morphism(const std::filesystem::path& path) {
    return parse_morphism(read_file(path), [&](const std::string& name) { return read_algebra(sibling(path, name)); });
}

std::string format_morphism(const MorphismTable& h, const std::string& source_name, const std::string& target_name) {
    std::string out = "source: " + source_name + "\ntarget: " + target_name + "\n";
    for (Element a : h.source.base().elements())
        out += "map: " + h.source.base().format(a) + " " + h.target.base().format(h(a)) + "\n";
    return out;
}

PointMap parse_point_map(std::string_view text, const SpaceLoader& load) {
    const MapFile file = split_map_file(text);
    PointMap f{load(file.source), load(file.target), {}};
    std::vector<std::optional<std::size_t>> image(f.source.size());
    for (const Line& l : file.maps) {
        const std::size_t x = point_at(f.source, l, l.fields[0]);
        const std::size_t y = point_at(f.target, l, l.fields[1]);
        if (image[x]) fail(l, "second 'map:' line for " + f.source.name(x), l.fields[0].column);
        image[x] = y;
    }
    for (std::size_t x = 0; x < f.source.size(); ++x) {
        if (!image[x]) throw ParseError("no 'map:' line for " + f.source.name(x), 1, 1);
        f.image.push_back(*image[x]);
    }
    return f;
}

PointMap read_point_map(const std::filesystem::path& path) {
    return parse_point_map(read_file(path), [&](const std::string& name) { return read_space(sibling(path, name)); });
}

std::string format_point_map(const PointMap& f, const std::string& source_name, const std::string& target_name) {
    std::string out = "source: " + source_name + "\ntarget: " + target_name + "\n";
    for (std::size_t x = 0; x < f.source.size(); ++x)
        out += "map: " + f.source.name(x) + " " + f.target.name(f(x)) + "\n";
    return out;
}

s2ic::AlgebraicValuation parse_algebraic_valuation(std::string_view text, const FiniteBooleanAlgebra& alg) {
    s2ic::AlgebraicValuation out;
    for (const auto& l : split_lines(text)) {
        if (l.key != "val") fail(l, "unknown keyword '" + l.key + "'");
        if (l.fields.size() != 2) fail(l, "expected 'val: p X'");
        if (!out.emplace(l.fields[0].text, element_at(alg, l, l.fields[1])).second) {
            fail(l, "variable '" + l.fields[0].text + "' bound twice", l.fields[0].column);
        }
    }
    return out;
}

s2ic::TopologicalValuation parse_topological_valuation(std::string_view text, const FiniteSpace& space) {
    s2ic::TopologicalValuation out;
    for (const auto& l : split_lines(text)) {
        if (l.key != "val") fail(l, "unknown keyword '" + l.key + "'");
        if (l.fields.size() < 2 || l.fields[1].text != "open:") fail(l, "expected 'val: p open: x y'");
        PointSet u;
        for (std::size_t i = 2; i < l.fields.size(); ++i) u.insert(point_at(space, l, l.fields[i]));
        if (!out.emplace(l.fields[0].text, u).second) {
            fail(l, "variable '" + l.fields[0].text + "' bound twice", l.fields[0].column);
        }
    }
    return out;
}

}  // namespace dv::io
