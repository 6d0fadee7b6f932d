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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoeplitz/rational_function.hpp"

namespace qtoeplitz {

/// a(z) X(z+h) + b(z) X(z) = rhs(z) for an unknown rational X.
struct DifferenceEquation {
    RationalFunction a;
    RationalFunction b;
    RationalFunction rhs;
    Rational step{2};
};

/// base + sum_i c_i * generator_i over free scalars c_i.
struct AffineFamily {
    RationalFunction base;
    std::vector<std::pair<std::string, RationalFunction>> generators;

    /// Member for the given generator coefficients (missing ones are zero).
    RationalFunction member(const std::vector<GaussianRational>& coefficients) const;
    std::size_t dimension() const { return generators.size(); }
};

/// Exact residual test a*X(z+h) + b*X(z) - rhs == 0.
bool certify_residual(const DifferenceEquation& eq, const RationalFunction& x);

/// Polynomial denominator U such that every rational solution of
/// A(z) X(z+h) + B(z) X(z) = C(z), A, B, C polynomials, has the form P/U.
Polynomial universal_denominator(const Polynomial& a, const Polynomial& b, const Rational& step);

/// Solution of a(z) X(z+h) + b(z) X(z) = sum_i c_i rhs_i(z) with symbolic
/// right-hand side coefficients c_i.
struct ParametricSolution {
    /// particular[i] solves the equation with c = e_i whenever c satisfies
    /// all compatibility conditions.
    std::vector<RationalFunction> particular;
    /// Basis of the homogeneous rational solution space (dimension <= 1).
    std::vector<RationalFunction> homogeneous;
    /// Each row lambda requires sum_i lambda_i c_i = 0 for solvability.
    std::vector<std::vector<GaussianRational>> compatibility;
};

ParametricSolution solve_parametric(const RationalFunction& a, const RationalFunction& b,
                                    const std::vector<RationalFunction>& rhs, const Rational& step);

/// Homogeneous rational solutions (rhs ignored), named "c0".
AffineFamily homogeneous_solutions(const DifferenceEquation& eq);

/// All rational solutions, or nullopt when none exists.
std::optional<AffineFamily> solve(const DifferenceEquation& eq);

}  // namespace qtoeplitz
