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
#include <string>
#include <utility>
#include <vector>

#include "qtoeplitz/gaussian_rational.hpp"

namespace qtoeplitz {

/// Dense univariate polynomial over the Gaussian rationals, coefficients in
/// ascending powers. The zero polynomial has no coefficients; otherwise the
/// leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs);
    Polynomial(std::initializer_list<GaussianRational> coeffs);
    static Polynomial constant(const GaussianRational& c);
    /// The polynomial z + c.
    static Polynomial linear(const GaussianRational& c);
    static Polynomial monomial(const GaussianRational& c, int power);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coefficients() const { return c_; }
    GaussianRational coeff(int power) const;
    GaussianRational leading() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_real() const;

    Polynomial monic() const;
    Polynomial derivative() const;
    /// P(z + h).
    Polynomial shifted(const GaussianRational& h) const;
    GaussianRational operator()(const GaussianRational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
    friend Polynomial operator*(const GaussianRational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Exact quotient; throws std::logic_error if the remainder is nonzero.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);
/// Monic gcd (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned exponent);

}  // namespace qtoeplitz
