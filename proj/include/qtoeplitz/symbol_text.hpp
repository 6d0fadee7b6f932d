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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtoeplitz/graded_operator.hpp"

namespace qtoeplitz {

class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A parsed symbol with its source text. window is the degree range the
/// document asks to examine (defaults to the symbol's own support).
struct SymbolDocument {
    PolarSymbol symbol;
    std::string source;
    std::pair<int, int> window{0, 0};
    std::vector<std::string> warnings;
};

/// Grammar (whitespace is ignored):
///   symbol := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := coeff | 'e(' int ')' | 'r' ['^' exponent] | 'log(r)' ['^' int]
///           | 'z' ['^' int] | 'zbar' ['^' int]
///   coeff  := rational | '(' rational ',' rational ')'
///   exponent := ['-'] digits ['/' digits]
/// Factors multiply: degrees and exponents add, coefficients multiply.
/// z^l is e(l)*r^l and zbar^l is e(-l)*r^l.
SymbolDocument parse_symbol(const std::string& text);

/// Canonical text: terms by descending degree, then descending exponent.
/// parse_symbol(print_symbol(s)).symbol == s.
std::string print_symbol(const PolarSymbol& s);

/// Splits a document into symbols: one per non-empty line, '#' starts a
/// comment. A line "# window: lo hi" sets the window of the next symbol.
std::vector<SymbolDocument> parse_documents(const std::string& text);

}  // namespace qtoeplitz
