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

#include "report.hpp"

#include <sstream>

namespace dvw {

void Report::field(const std::string& key, const std::string& value) { lines_.push_back({false, key + ": " + value}); }

void Report::check(const dv::CheckResult& c, const std::string& prefix) {
    const std::string name = prefix.empty() ? c.name : prefix + "." + c.name;
    if (format_ == Format::kv) {
        lines_.push_back({false, "check." + name + ": " + (c.passed ? "pass" : "fail")});
        if (!c.passed && !c.witness.empty()) lines_.push_back({false, "witness." + name + ": " + c.witness});
        return;
    }
    std::string line = (c.passed ? "  ok    " : "  FAIL  ") + name;
    if (!c.passed && !c.witness.empty()) line += "  (" + c.witness + ")";
    lines_.push_back({false, line});
}

void Report::verdict(const dv::Verdict& v, const std::string& prefix) {
    for (const auto& c : v.checks()) check(c, prefix);
}

void Report::payload(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines_.push_back({true, format_ == Format::kv ? key + ".line: " + line : line});
    }
}

void Report::write(std::ostream& out) const {
    for (const auto& l : lines_) {
        if (format_ == Format::text && payload_only_ && !l.payload) continue;
        out << l.text << '\n';
    }
}

}  // namespace dvw
