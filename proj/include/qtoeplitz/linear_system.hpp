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
#include <vector>

#include "qtoeplitz/gaussian_rational.hpp"

namespace qtoeplitz {

using Row = std::vector<GaussianRational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns pivot columns (one per
/// nonzero row, rows beyond the rank are removed).
std::vector<std::size_t> rref(Matrix& m, std::size_t columns);

/// Basis of {x : m x = 0}.
std::vector<Row> nullspace(Matrix m, std::size_t columns);

std::size_t rank(Matrix m, std::size_t columns);

}  // namespace qtoeplitz
