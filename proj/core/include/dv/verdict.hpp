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

#ifndef DV_VERDICT_HPP
#define DV_VERDICT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dv {

/// Outcome of one named check. `witness` is empty on success and describes
/// the first (canonically least) counterexample otherwise.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;
};

/// An ordered list of named checks. Recognizers and verifiers all return one
/// of these so reports can be printed uniformly.
class Verdict {
public:
    Verdict() = default;

    void add(std::string name, bool passed, std::string witness = {}) {
        checks_.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
    }

    /// Appends every check of `other`, prefixing names with `prefix.`.
    void merge(const Verdict& other, const std::string& prefix = {}) {
        for (const auto& c : other.checks_) {
            checks_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.witness});
        }
    }

    bool passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
    }

    /// Looks up a check by name; returns nullptr when absent.
    const CheckResult* find(const std::string& name) const {
        auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.name == name; });
        return it == checks_.end() ? nullptr : &*it;
    }

    /// True when the named check exists and passed.
    bool passed(const std::string& name) const {
        const auto* c = find(name);
        return c != nullptr && c->passed;
    }

    const std::vector<CheckResult>& checks() const noexcept { return checks_; }

    /// First failing check, or nullptr.
    const CheckResult* first_failure() const {
        auto it = std::find_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; });
        return it == checks_.end() ? nullptr : &*it;
    }

private:
    std::vector<CheckResult> checks_;
};

}  // namespace dv

#endif  // DV_VERDICT_HPP
