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

#include "qtoeplitz/quadrature.hpp"

#include <cmath>

namespace qtoeplitz {

namespace {

constexpr long double kHalfPi = 1.5707963267948966192313216916397514L;
constexpr long double kTMax = 4.5L;

// Sum of w(t) f(x(t)) over t = offset + j*h, |t| <= kTMax.
std::complex<long double> tanh_sinh_sum(const std::function<std::complex<double>(long double)>& f, long double h,
                                        long double offset, long double step) {
    std::complex<long double> s = 0;
    for (long double t = offset; t <= kTMax; t += step) {
        for (int sign : {1, -1}) {
            if (t == 0 && sign == -1) continue;
            long double tt = sign * t;
            long double u = kHalfPi * std::sinh(tt);
            long double ch = std::cosh(u);
            // x = (1 + tanh u)/2 = 1/(1+e^{-2u}); computed to avoid cancellation near 0.
            long double x = tt >= 0 ? 1.0L / (1.0L + std::exp(-2.0L * u)) : std::exp(2.0L * u) / (1.0L + std::exp(2.0L * u));
            if (x <= 0.0L || x >= 1.0L) continue;
            long double w = kHalfPi * std::cosh(tt) / (2.0L * ch * ch);
            std::complex<double> fx = f(x);
            s += std::complex<long double>(fx.real(), fx.imag()) * w;
        }
    }
    return s * h;
}

}  // namespace

QuadratureResult integrate_unit_interval(const std::function<std::complex<double>(long double)>& f, double rel_tol,
                                         int max_level) {
    long double h = 0.5L;
    std::complex<long double> raw = tanh_sinh_sum(f, 1.0L, 0.0L, h) / 1.0L;
    std::complex<long double> estimate = raw * h;
    QuadratureResult r;
    for (int level = 1; level <= max_level; ++level) {
        // Add the midpoints of the previous grid.
        std::complex<long double> mid = tanh_sinh_sum(f, 1.0L, h / 2, h);
        raw += mid;
        h /= 2;
        std::complex<long double> next = raw * h;
        long double diff = std::abs(next - estimate);
        estimate = next;
        r.levels = level;
        r.error_estimate = static_cast<double>(diff);
        if (level >= 3 && diff <= rel_tol * std::abs(next)) break;
    }
    r.value = {static_cast<double>(estimate.real()), static_cast<double>(estimate.imag())};
    return r;
}

QuadratureResult numeric_mellin(const RadialSymbol& phi, double z) {
    return integrate_unit_interval(
        [&](long double r) {
            std::complex<long double> sum = 0;
            const long double lr = std::log(r);
            for (const auto& t : phi.terms()) {
                long double mag = std::pow(r, static_cast<long double>(t.exponent.get_d()) + z - 1.0L) *
                                  std::pow(lr, static_cast<long double>(t.log_power));
                auto c = t.coefficient.to_complex();
                sum += std::complex<long double>(c.real(), c.imag()) * mag;
            }
            return std::complex<double>(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
        });
}

}  // namespace qtoeplitz
