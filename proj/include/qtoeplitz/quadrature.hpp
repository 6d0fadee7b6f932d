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

#include <complex>
#include <functional>

#include "qtoeplitz/radial.hpp"

namespace qtoeplitz {

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0;
    int levels = 0;
};

/// Adaptive double-exponential (tanh-sinh) quadrature over (0, 1); copes
/// with integrable algebraic/logarithmic endpoint singularities.
QuadratureResult integrate_unit_interval(const std::function<std::complex<double>(long double)>& f,
                                         double rel_tol = 1e-13, int max_level = 12);

/// Numeric int_0^1 phi(r) r^(z-1) dr; independent of the closed-form rule in mellin().
QuadratureResult numeric_mellin(const RadialSymbol& phi, double z);

}  // namespace qtoeplitz
