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

#include "dv/frame.hpp"

#include <algorithm>
#include <set>

#include "dv/error.hpp"

namespace dv {

FiniteFrame::FiniteFrame(std::vector<std::string> names,
                         const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs)
    : names_(std::move(names)) {
    const std::size_t n = names_.size();
    if (n == 0) throw InputError("a frame needs at least one element");
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos) {
            throw InputError("invalid frame element name '" + name + "'");
        }
        if (!seen.insert(name).second) throw InputError("duplicate frame element '" + name + "'");
    }
    leq_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) leq_[a * n + a] = 1;
    for (auto [a, b] : leq_pairs) {
        if (a >= n || b >= n) throw InputError("order pair mentions an unknown element");
        leq_[a * n + b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (leq_[a * n + b] && leq_[b * n + a]) {
                throw InputError("order is not antisymmetric: " + names_[a] + " and " + names_[b]);
            }
    build();
}

FiniteFrame FiniteFrame::from_order(std::vector<std::string> names,
                                    const std::function<bool(std::size_t, std::size_t)>& leq) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = 0; b < names.size(); ++b)
            if (a != b && leq(a, b)) pairs.emplace_back(a, b);
    return FiniteFrame(std::move(names), pairs);
}

void FiniteFrame::build() {
    const std::size_t n = size();
    auto bound = [&](std::size_t a, std::size_t b, bool lower) -> std::size_t {
        auto below = [&](std::size_t x, std::size_t y) { return lower ? leq(x, y) : leq(y, x); };
        for (std::size_t m = 0; m < n; ++m) {
            if (!below(m, a) || !below(m, b)) continue;
            bool best = true;
            for (std::size_t l = 0; l < n && best; ++l) {
                if (below(l, a) && below(l, b) && !below(l, m)) best = false;
            }
            if (best) return m;
        }
        throw InputError(std::string("elements ") + names_[a] + " and " + names_[b] + " have no " +
                         (lower ? "meet" : "join"));
    };
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            meet_[a * n + b] = meet_[b * n + a] = bound(a, b, true);
            join_[a * n + b] = join_[b * n + a] = bound(a, b, false);
        }
    bottom_ = 0;
    top_ = 0;
    for (std::size_t a = 1; a < n; ++a) {
        bottom_ = meet(bottom_, a);
        top_ = join(top_, a);
    }
    neg_.assign(n, bottom_);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (meet(a, b) == bottom_) neg_[a] = join(neg_[a], b);
}

std::optional<std::size_t> FiniteFrame::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteFrame::join_all(const std::vector<std::size_t>& family) const {
    std::size_t out = bottom_;
    for (std::size_t a : family) out = join(out, a);
    return out;
}

std::vector<std::size_t> FiniteFrame::non_top() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (a != top_) out.push_back(a);
    return out;
}

Verdict FrameReport::to_verdict() const {
    Verdict v;
    for (const CheckResult* c : {&is_frame, &is_compact, &is_regular}) v.add(c->name, c->passed, c->witness);
    return v;
}

FrameReport check_frame(const FiniteFrame& l) {
    const std::size_t n = l.size();
    FrameReport r;
    for (std::size_t a = 0; a < n && r.is_frame.passed; ++a)
        for (std::size_t b = 0; b < n && r.is_frame.passed; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
                    r.is_frame.passed = false;
                    r.is_frame.witness = "distributivity fails at " + l.name(a) + ", " + l.name(b) + ", " + l.name(c);
                    break;
                }
            }

    // Subfamilies of a finite lattice are finite, so each cover is its own
    // finite subcover; for small lattices we still reduce every cover to an
    // irredundant one and confirm it joins to the top.
    if (n <= 16) {
        for (std::uint32_t family = 0; family < (std::uint32_t{1} << n) && r.is_compact.passed; ++family) {
            auto join_of = [&](std::uint32_t f) {
                std::size_t j = l.bottom();
                for (std::size_t i = 0; i < n; ++i)
                    if ((f >> i) & 1U) j = l.join(j, i);
                return j;
            };
            if (join_of(family) != l.top()) continue;
            std::uint32_t sub = family;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t without = sub & ~(std::uint32_t{1} << i);
                if (((sub >> i) & 1U) && join_of(without) == l.top()) sub = without;
            }
            if (join_of(sub) != l.top()) {
                r.is_compact.passed = false;
                r.is_compact.witness = "a cover of the top has no finite subcover";
            }
        }
    }

    r.rather_below.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) r.rather_below[a][b] = l.rather_below(a, b);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t j = l.bottom();
        for (std::size_t b = 0; b < n; ++b)
            if (r.rather_below[b][a]) j = l.join(j, b);
        if (j != a) {
            r.is_regular.passed = false;
            r.is_regular.witness = "the elements rather below " + l.name(a) + " join to " + l.name(j);
            break;
        }
    }
    return r;
}

bool is_order_isomorphism(const FiniteFrame& l1, const FiniteFrame& l2, const std::vector<std::size_t>& map) {
    const std::size_t n = l1.size();
    if (n != l2.size() || map.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::size_t b : map) {
        if (b >= n || hit[b]) return false;
        hit[b] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (l1.leq(a, b) != l2.leq(map[a], map[b])) return false;
    return true;
}

std::optional<std::vector<std::size_t>> find_order_isomorphism(const FiniteFrame& l1, const FiniteFrame& l2) {
    const std::size_t n = l1.size();
    if (n != l2.size()) return std::nullopt;
    auto signature = [](const FiniteFrame& l, std::size_t a) {
        std::size_t below = 0, above = 0;
        for (std::size_t b = 0; b < l.size(); ++b) {
            below += l.leq(b, a);
            above += l.leq(a, b);
        }
        return std::pair{below, above};
    };
    std::vector<std::pair<std::size_t, std::size_t>> s1(n), s2(n);
    for (std::size_t a = 0; a < n; ++a) {
        s1[a] = signature(l1, a);
        s2[a] = signature(l2, a);
    }
    {
        auto x = s1, y = s2;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> assign = [&](std::size_t a) -> bool {
        if (a == n) return true;
        for (std::size_t b = 0; b < n; ++b) {
            if (used[b] || s1[a] != s2[b]) continue;
            bool consistent = true;
            for (std::size_t c = 0; c < a && consistent; ++c) {
                consistent = l1.leq(a, c) == l2.leq(b, map[c]) && l1.leq(c, a) == l2.leq(map[c], b);
            }
            if (!consistent) continue;
            used[b] = true;
            map[a] = b;
            if (assign(a + 1)) return true;
            used[b] = false;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return map;
}

FiniteFrame boolean_lattice(unsigned k) {
    if (k > 8) throw InputError("boolean_lattice supports at most 8 atoms");
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            names[i] = "0";
        } else if (i == n - 1) {
            names[i] = "1";
        } else {
            for (unsigned j = 0; j < k; ++j) {
                if (!((i >> j) & 1U)) continue;
                if (!names[i].empty()) names[i] += '+';
                names[i] += static_cast<char>('a' + j);
            }
        }
    }
    return FiniteFrame::from_order(std::move(names), [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

FiniteFrame chain(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    return FiniteFrame::from_order(std::move(names), [](std::size_t a, std::size_t b) { return a <= b; });
}

FiniteFrame omega(const FiniteSpace& x) {
    const auto& opens = x.opens();
    std::vector<std::string> names;
    for (PointSet u : opens) names.push_back(x.format(u));
    return FiniteFrame::from_order(std::move(names),
                                   [&](std::size_t a, std::size_t b) { return opens[a].subset_of(opens[b]); });
}

std::vector<std::size_t> join_prime_elements(const FiniteFrame& l) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < l.size(); ++a) {
        if (a == l.bottom()) continue;
        bool prime = true;
        for (std::size_t x = 0; x < l.size() && prime; ++x)
            for (std::size_t y = 0; y < l.size(); ++y)
                if (l.leq(a, l.join(x, y)) && !l.leq(a, x) && !l.leq(a, y)) {
                    prime = false;
                    break;
                }
        if (prime) out.push_back(a);
    }
    return out;
}

FiniteSpace frame_points(const FiniteFrame& l) {
    const auto primes = join_prime_elements(l);
    if (primes.size() > FiniteSpace::kMaxPoints) throw InputError("frame has too many points");
    std::vector<std::string> names;
    for (std::size_t a : primes) names.push_back(l.name(a));
    std::vector<PointSet> family;
    for (std::size_t b = 0; b < l.size(); ++b) {
        PointSet u;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (l.leq(primes[i], b)) u.insert(i);
        family.push_back(u);
    }
    return generate_topology(std::move(names), family);
}

FiniteFrame frame_coproduct(const FiniteFrame& l1, const FiniteFrame& l2) {
    return omega(product_space(frame_points(l1), frame_points(l2)));
}

}  // namespace dv
