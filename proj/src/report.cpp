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

#include "qtoeplitz/report.hpp"

#include <stdexcept>

namespace qtoeplitz {

Report::Report(const std::string& command) {
    tree_["schema"] = kSchema;
    tree_["command"] = command;
    tree_["status"] = "ok";
    tree_["inputs"] = Tree::object();
    tree_["results"] = Tree::object();
}

std::string Report::serialize() const { return tree_.dump(2) + "\n"; }

Report Report::deserialize(const std::string& text) {
    Report r;
    try {
        r.tree_ = Tree::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    if (!r.tree_.is_object() || r.tree_.value("schema", std::string()) != kSchema)
        throw std::invalid_argument(std::string("report schema is not ") + kSchema);
    return r;
}

namespace {

std::string scalar(const Report::Tree& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Arrays of scalars print on one line: [a, b].
bool flat(const Report::Tree& v) {
    if (!v.is_array()) return false;
    for (const auto& c : v)
        if (c.is_structured()) return false;
    return true;
}

std::string inline_array(const Report::Tree& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
}

void render_node(const Report::Tree& v, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) {
            if (flat(child) && child.size() <= 4) {
                out += pad + key + ": " + inline_array(child) + "\n";
            } else if (child.is_structured() && !child.empty()) {
                out += pad + key + ":\n";
                render_node(child, indent + 2, out);
            } else {
                out += pad + key + ": " + (child.is_structured() ? (child.is_array() ? "[]" : "{}") : scalar(child)) +
                       "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& child : v) {
            if (child.is_structured() && !child.empty()) {
                out += pad + "-\n";
                render_node(child, indent + 2, out);
            } else {
                out += pad + "- " + scalar(child) + "\n";
            }
        }
    } else {
        out += pad + scalar(v) + "\n";
    }
}

}  // namespace

std::string Report::render() const {
    std::string out;
    render_node(tree_, 0, out);
    return out;
}

}  // namespace qtoeplitz
