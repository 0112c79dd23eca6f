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

#include "dv/space.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "dv/error.hpp"

namespace dv {

namespace {

void validate_names(const std::vector<std::string>& names) {
    if (names.size() > FiniteSpace::kMaxPoints) {
        throw InputError("space with " + std::to_string(names.size()) + " points exceeds the limit of " +
                         std::to_string(FiniteSpace::kMaxPoints));
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || n.find_first_of(" \t\r\n") != std::string::npos) {
            throw InputError("invalid point name '" + n + "'");
        }
        if (!seen.insert(n).second) throw InputError("duplicate point name '" + n + "'");
    }
}

// Closes `family` under `op` in place.
void close_under(std::vector<std::uint64_t>& family, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& op) {
    std::unordered_set<std::uint64_t> seen(family.begin(), family.end());
    family.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const std::uint64_t r = op(family[i], family[j]);
            if (seen.insert(r).second) family.push_back(r);
        }
    }
}

}  // namespace

FiniteSpace::FiniteSpace() : opens_{PointSet{}} {}

FiniteSpace::FiniteSpace(std::vector<std::string> point_names, std::vector<PointSet> opens)
    : names_(std::move(point_names)), opens_(std::move(opens)) {
    validate_names(names_);
    const PointSet all = full();
    for (PointSet u : opens_) {
        if (!u.subset_of(all)) throw InputError("open set mentions a point outside the space");
    }
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    if (!is_open(PointSet{})) throw InputError("open family does not contain the empty set");
    if (!is_open(all)) throw InputError("open family does not contain the whole space");
    for (std::size_t i = 0; i < opens_.size(); ++i) {
        for (std::size_t j = i + 1; j < opens_.size(); ++j) {
            if (!is_open(opens_[i] | opens_[j])) {
                throw InputError("open family is not closed under union: " + format(opens_[i]) + " ∪ " +
                                 format(opens_[j]));
            }
            if (!is_open(opens_[i] & opens_[j])) {
                throw InputError("open family is not closed under intersection: " + format(opens_[i]) + " ∩ " +
                                 format(opens_[j]));
            }
        }
    }
    neighbourhood_.resize(names_.size());
    for (std::size_t x = 0; x < names_.size(); ++x) neighbourhood_[x] = smallest_open_containing(PointSet::single(x));
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (PointSet u : opens_) out.push_back(complement(u));
    std::sort(out.begin(), out.end());
    return out;
}

bool FiniteSpace::is_open(PointSet set) const { return std::binary_search(opens_.begin(), opens_.end(), set); }

PointSet FiniteSpace::interior(PointSet set) const {
    PointSet out;
    for (PointSet u : opens_) {
        if (u.subset_of(set)) out |= u;
    }
    return out;
}

PointSet FiniteSpace::closure(PointSet set) const {
    PointSet outside;
    for (PointSet u : opens_) {
        if (u.disjoint(set)) outside |= u;
    }
    return complement(outside);
}

PointSet FiniteSpace::smallest_open_containing(PointSet set) const {
    PointSet out = full();
    for (PointSet u : opens_) {
        if (set.subset_of(u)) out &= u;
    }
    return out;
}

bool FiniteSpace::specialization_leq(std::size_t x, std::size_t y) const {
    if (x >= size() || y >= size()) throw InputError("point index out of range");
    return neighbourhood_[x].contains(y);
}

PointSet FiniteSpace::down(PointSet set) const {
    PointSet out;
    for (std::size_t x = 0; x < size(); ++x) {
        if (!neighbourhood_[x].disjoint(set)) out.insert(x);
    }
    return out;
}

PointSet FiniteSpace::up(PointSet set) const {
    PointSet out;
    for (std::size_t x : set.points()) out |= neighbourhood_[x];
    return out;
}

PointSet FiniteSpace::up_interior(PointSet set) const { return complement(down(complement(set))); }

std::string FiniteSpace::format(PointSet set) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t x : set.points()) {
        if (!first) out += ',';
        out += x < names_.size() ? names_[x] : "?" + std::to_string(x);
        first = false;
    }
    return out + "}";
}

FiniteSpace generate_topology(std::vector<std::string> point_names, const std::vector<PointSet>& subbasis) {
    validate_names(point_names);
    const PointSet all = PointSet::first(point_names.size());
    std::vector<std::uint64_t> family{all.mask()};
    for (PointSet s : subbasis) {
        if (!s.subset_of(all)) throw InputError("subbasis member mentions a point outside the space");
        family.push_back(s.mask());
    }
    close_under(family, [](std::uint64_t a, std::uint64_t b) { return a & b; });
    family.push_back(0);
    close_under(family, [](std::uint64_t a, std::uint64_t b) { return a | b; });
    std::vector<PointSet> opens;
    opens.reserve(family.size());
    for (std::uint64_t m : family) opens.emplace_back(m);
    return FiniteSpace(std::move(point_names), std::move(opens));
}

FiniteSpace discrete_space(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return discrete_space(std::move(names));
}

FiniteSpace discrete_space(std::vector<std::string> point_names) {
    std::vector<PointSet> singletons;
    for (std::size_t i = 0; i < point_names.size(); ++i) singletons.push_back(PointSet::single(i));
    return generate_topology(std::move(point_names), singletons);
}

FiniteSpace product_space(const FiniteSpace& x, const FiniteSpace& y) {
    std::vector<std::string> names;
    for (const auto& a : x.point_names())
        for (const auto& b : y.point_names()) names.push_back(a + "*" + b);
    if (names.size() > FiniteSpace::kMaxPoints) throw InputError("product space has too many points");
    const std::size_t m = y.size();
    std::vector<PointSet> boxes;
    for (PointSet u : x.opens()) {
        for (PointSet v : y.opens()) {
            PointSet box;
            for (std::size_t i : u.points())
                for (std::size_t j : v.points()) box.insert(i * m + j);
            boxes.push_back(box);
        }
    }
    return generate_topology(std::move(names), boxes);
}

bool is_basis(const FiniteSpace& space, const std::vector<PointSet>& basis) {
    for (PointSet b : basis) {
        if (!space.is_open(b)) return false;
    }
    for (PointSet u : space.opens()) {
        PointSet covered;
        for (PointSet b : basis) {
            if (b.subset_of(u)) covered |= b;
        }
        if (covered != u) return false;
    }
    return true;
}

bool is_homeomorphism(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& map) {
    if (x.size() != y.size() || map.size() != x.size()) return false;
    PointSet hit;
    for (std::size_t target : map) {
        if (target >= y.size() || hit.contains(target)) return false;
        hit.insert(target);
    }
    if (x.opens().size() != y.opens().size()) return false;
    for (PointSet u : x.opens()) {
        PointSet image;
        for (std::size_t p : u.points()) image.insert(map[p]);
        if (!y.is_open(image)) return false;
    }
    return true;
}

std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y) {
    const std::size_t n = x.size();
    if (n != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;

    auto signature = [](const FiniteSpace& s, std::size_t p) {
        const PointSet one = PointSet::single(p);
        return std::pair{s.up(one).size(), s.down(one).size()};
    };
    std::vector<std::pair<std::size_t, std::size_t>> sig_x(n), sig_y(n);
    for (std::size_t p = 0; p < n; ++p) {
        sig_x[p] = signature(x, p);
        sig_y[p] = signature(y, p);
    }
    {
        auto sx = sig_x, sy = sig_y;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return std::nullopt;
    }

    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> assign = [&](std::size_t p) -> bool {
        if (p == n) return is_homeomorphism(x, y, map);
        for (std::size_t q = 0; q < n; ++q) {
            if (used[q] || sig_x[p] != sig_y[q]) continue;
            bool consistent = true;
            for (std::size_t r = 0; r < p && consistent; ++r) {
                consistent = x.specialization_leq(p, r) == y.specialization_leq(q, map[r]) &&
                             x.specialization_leq(r, p) == y.specialization_leq(map[r], q);
            }
            if (!consistent) continue;
            used[q] = true;
            map[p] = q;
            if (assign(p + 1)) return true;
            used[q] = false;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return map;
}

}  // namespace dv
