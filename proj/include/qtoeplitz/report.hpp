// Copyright 2026 The qtoeplitz Authors
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

#pragma once

#include <string>

#include "json.hpp"

namespace qtoeplitz {

/// Key-value report tree. Key order is insertion order, so output is
/// deterministic for fixed inputs. Exact numbers are stored as strings.
class Report {
public:
    using Tree = nlohmann::ordered_json;
    static constexpr const char* kSchema = "qtoeplitz.report/1";

    Report() = default;
    explicit Report(const std::string& command);

    Tree& tree() { return tree_; }
    const Tree& tree() const { return tree_; }
    Tree& inputs() { return tree_["inputs"]; }
    Tree& results() { return tree_["results"]; }
    void set_status(const std::string& status) { tree_["status"] = status; }
    std::string status() const { return tree_.value("status", std::string("ok")); }

    /// Machine-readable text (JSON, two-space indent).
    std::string serialize() const;
    /// Throws std::invalid_argument on malformed text or a schema mismatch.
    static Report deserialize(const std::string& text);
    /// Indented "key: value" rendering for terminals.
    std::string render() const;

    friend bool operator==(const Report& a, const Report& b) { return a.tree_ == b.tree_; }

private:
    Tree tree_;
};

}  // namespace qtoeplitz
