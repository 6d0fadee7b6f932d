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

#include <initializer_list>
#include <random>

#include "qtoeplitz/difference_solver.hpp"
#include "qtoeplitz/radial.hpp"
#include "qtoeplitz/rational_function.hpp"

namespace qtoeplitz::testing {

inline GaussianRational q(long n, long d = 1) { return GaussianRational::fraction(n, d); }

/// Product of (z + c) over the given shifts.
inline Polynomial linear_product(std::initializer_list<GaussianRational> shifts) {
    Polynomial p = Polynomial::constant(1);
    for (const auto& c : shifts) p = p * Polynomial::linear(c);
    return p;
}

inline RationalFunction rf(const Polynomial& n, const Polynomial& d) { return RationalFunction::normalize(n, d); }

inline RationalFunction z() { return RationalFunction::variable(); }

/// Random rational function whose denominator splits over small integer roots.
inline RationalFunction random_rational(std::mt19937& rng, int max_num_deg = 3, int max_poles = 3) {
    std::uniform_int_distribution<int> coeff(-6, 6), deg(0, max_num_deg), poles(0, max_poles), root(-8, 8),
        denom(1, 3);
    std::vector<GaussianRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = q(coeff(rng), denom(rng));
    Polynomial num(c);
    if (num.is_zero()) num = Polynomial::constant(1);
    Polynomial den = Polynomial::constant(1);
    int np = poles(rng);
    for (int i = 0; i < np; ++i) den = den * Polynomial::linear(q(root(rng), denom(rng) == 3 ? 2 : 1));
    return RationalFunction::normalize(num, den);
}

/// Product of random linear factors with small rational roots.
inline RationalFunction random_split(std::mt19937& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> nn(0, max_num), nd(0, max_den), root(-7, 7), half(0, 3), c(1, 5);
    Polynomial num = Polynomial::constant(q(c(rng), half(rng) + 1)), den = Polynomial::constant(1);
    for (int i = nn(rng); i > 0; --i) num = num * Polynomial::linear(q(root(rng), half(rng) == 0 ? 2 : 1));
    for (int i = nd(rng); i > 0; --i) den = den * Polynomial::linear(q(root(rng), half(rng) == 0 ? 2 : 1));
    return rf(num, den);
}

inline bool differs_by_kernel(const RationalFunction& x, const AffineFamily& fam) {
    RationalFunction d = x - fam.base;
    if (d.is_zero()) return true;
    if (fam.generators.empty()) return false;
    return (d / fam.generators[0].second).is_constant();
}

/// Random radial symbol; admissible_only keeps every exponent above -2.
inline RadialSymbol random_radial(std::mt19937& rng, bool admissible_only) {
    std::uniform_int_distribution<int> nterms(1, 4), num(-12, 18), den(1, 3), coeff(-5, 5), logs(0, 2);
    std::vector<RadialTerm> t;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational a(num(rng), den(rng));
        a.canonicalize();
        if (admissible_only && a <= -2) a = -a;
        int c = coeff(rng);
        t.push_back({q(c == 0 ? 1 : c, den(rng)), a, logs(rng)});
    }
    return RadialSymbol(std::move(t));
}

}  // namespace qtoeplitz::testing
