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

#include "dv/s2ic/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "dv/error.hpp"

namespace dv::s2ic {

std::string to_string(ModelClass c) {
    switch (c) {
        case ModelClass::subordination:
            return "subordination";
        case ModelClass::contact:
            return "contact";
        case ModelClass::compingent:
            return "compingent";
    }
    return "?";
}

ModelClass parse_model_class(const std::string& text) {
    if (text == "subordination") return ModelClass::subordination;
    if (text == "contact") return ModelClass::contact;
    if (text == "compingent") return ModelClass::compingent;
    throw InputError("unknown model class '" + text + "' (expected subordination, contact or compingent)");
}

namespace {

bool admitted(const SubordinationAlgebra& alg, ModelClass c) {
    const AxiomReport r = check_axioms(alg);
    switch (c) {
        case ModelClass::subordination:
            return at_least(classify(r, alg), Classification::subordination);
        case ModelClass::contact:
            return r.contact();
        case ModelClass::compingent:
            return r.compingent();
    }
    return false;
}

}  // namespace

std::vector<SubordinationAlgebra> class_tables(unsigned atoms, ModelClass c) {
    if (atoms > kMaxSearchAtoms) throw InputError("at most " + std::to_string(kMaxSearchAtoms) + " atoms are searched");
    const FiniteBooleanAlgebra base(atoms);
    const std::uint64_t relations = std::uint64_t{1} << (atoms * atoms);
    std::vector<SubordinationAlgebra> out;
    for (std::uint64_t r = 0; r < relations; ++r) {
        // row i of R: atoms related to atom i
        auto image = [&](Element a) {
            std::uint32_t bits = 0;
            for (unsigned i = 0; i < atoms; ++i)
                if ((a.bits() >> i) & 1U) bits |= static_cast<std::uint32_t>((r >> (i * atoms)) & ((1U << atoms) - 1));
            return bits;
        };
        SubordinationAlgebra alg = SubordinationAlgebra::from_predicate(
            base, [&](Element a, Element b) { return (image(a) & ~b.bits()) == 0; });
        if (admitted(alg, c)) out.push_back(std::move(alg));
    }
    std::sort(out.begin(), out.end(), table_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SearchResult countermodel_search(const Formula& f, unsigned max_atoms, ModelClass c, unsigned jobs) {
    if (max_atoms > kMaxSearchAtoms) {
        throw InputError("bound " + std::to_string(max_atoms) + " is too large; at most " +
                         std::to_string(kMaxSearchAtoms) + " atoms are searched");
    }
    std::vector<SubordinationAlgebra> tables;
    for (unsigned n = 0; n <= max_atoms; ++n) {
        auto more = class_tables(n, c);
        tables.insert(tables.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{kNone};
    std::mutex mu;
    std::optional<Countermodel> found;

    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t t = start; t < tables.size(); t += stride) {
            if (t > best.load()) return;
            const AlgebraicValidity r = is_valid_on_algebra(tables[t], f);
            if (r.valid) continue;
            std::lock_guard<std::mutex> lock(mu);
            if (t < best.load()) {
                best = t;
                found = Countermodel{tables[t], *r.countervaluation, r.counter_value};
            }
            return;
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tables.size(), 1))));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> workers;
        for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(work, j, jobs);
        for (auto& w : workers) w.join();
    }

    SearchResult out;
    out.max_atoms = max_atoms;
    out.countermodel = std::move(found);
    out.tables_examined = best == kNone ? tables.size() : best + 1;
    return out;
}

}  // namespace dv::s2ic
