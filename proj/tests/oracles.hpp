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

#include "qtoeplitz/gaussian_rational.hpp"

namespace qtoeplitz::testing {

/// <T_{e^{ip theta} r^a} z^k, z^{k+p}> / ||z^{k+p}||^2 from the area integrals
///   (1/pi) int_D r^{2k+p+a} r dA = 2/(2k+p+a+2),  ||z^j||^2 = 1/(j+1).
/// Zero when k+p < 0 (the projection kills negative frequencies).
inline GaussianRational inner_product_weight(int p, long a, long k) {
    if (k + p < 0) return GaussianRational();
    Rational num(2 * (k + p + 1)), den(2 * k + p + a + 2);
    return GaussianRational(Rational(num / den));
}

}  // namespace qtoeplitz::testing
