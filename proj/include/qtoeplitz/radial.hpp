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
#include <stdexcept>
#include <string>
#include <vector>

#include "qtoeplitz/rational_function.hpp"

namespace qtoeplitz {

/// coefficient * r^exponent * (log r)^log_power
struct RadialTerm {
    GaussianRational coefficient;
    Rational exponent;
    int log_power = 0;

    friend bool operator==(const RadialTerm& a, const RadialTerm& b) {
        return a.coefficient == b.coefficient && a.exponent == b.exponent && a.log_power == b.log_power;
    }
};

/// Finite sum of RadialTerms, kept sorted by (exponent, log_power) with
/// distinct keys and nonzero coefficients. The empty sum is zero.
class RadialSymbol {
public:
    RadialSymbol() = default;
    explicit RadialSymbol(std::vector<RadialTerm> terms);
    static RadialSymbol monomial(const GaussianRational& c, const Rational& exponent, int log_power = 0);
    static RadialSymbol constant(const GaussianRational& c) { return monomial(c, Rational(0)); }

    const std::vector<RadialTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RadialSymbol& operator+=(const RadialSymbol& o);
    friend RadialSymbol operator+(RadialSymbol a, const RadialSymbol& b) { return a += b; }
    friend RadialSymbol operator*(const GaussianRational& s, const RadialSymbol& a);
    friend bool operator==(const RadialSymbol& a, const RadialSymbol& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RadialSymbol& a, const RadialSymbol& b) { return !(a == b); }

    /// phi(r) in double precision, for quadrature cross-checks.
    std::complex<double> operator()(double r) const;

    /// e.g. "3*r^-2 - 2", "r^2*log(r)".
    std::string str() const;

private:
    void canonicalize();
    std::vector<RadialTerm> terms_;
};

class NoRadialPreimage : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Mellin transform int_0^1 phi(r) r^(z-1) dr as a formal rational function:
/// r^a (log r)^m  ->  (-1)^m m! / (z+a)^(m+1).
RationalFunction mellin(const RadialSymbol& phi);

/// Inverse of mellin on proper rational functions with rational real poles.
/// Throws NoRadialPreimage for improper input or non-real poles, and
/// UnsupportedDenominator when the poles cannot be found.
RadialSymbol inverse_mellin(const RationalFunction& image);

struct Admissibility {
    bool admissible = true;
    /// Terms with exponent <= -2 (not in L^1([0,1), r dr)).
    std::vector<RadialTerm> witness;
};

Admissibility is_admissible(const RadialSymbol& phi);

}  // namespace qtoeplitz
