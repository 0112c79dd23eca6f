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

#ifndef DVW_REPORT_HPP
#define DVW_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dv/verdict.hpp"

namespace dvw {

enum class Format { text, kv };

/// Accumulates a verb's output in order. Both formats are line oriented:
/// text is meant for people, kv is `key: value` and nothing else.
class Report {
public:
    explicit Report(Format format) : format_(format) {}

    void field(const std::string& key, const std::string& value);
    void check(const dv::CheckResult& c, const std::string& prefix = {});
    void verdict(const dv::Verdict& v, const std::string& prefix = {});
    /// A file-shaped payload. In text mode it is printed verbatim, in kv mode
    /// each line becomes `<key>.line: ...`.
    void payload(const std::string& key, const std::string& text);
    /// When set, text mode prints nothing but the payloads, so the output can
    /// be fed back to the tool.
    void set_payload_only(bool on) { payload_only_ = on; }

    void write(std::ostream& out) const;

private:
    Format format_;
    bool payload_only_ = false;
    struct Line {
        bool payload;
        std::string text;
    };
    std::vector<Line> lines_;
};

}  // namespace dvw

#endif  // DVW_REPORT_HPP
