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

#include <stdexcept>
#include <string>
#include <vector>

#include "qtoeplitz/polynomial.hpp"

namespace qtoeplitz {

/// Raised when a value is requested at a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a denominator has a factor without Gaussian-rational roots.
class UnsupportedDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Quotient of polynomials held in canonical form: coprime, monic
/// denominator. Structural equality is equality of rational functions.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(GaussianRational(1))) {}
    RationalFunction(const GaussianRational& c)  // NOLINT(google-explicit-constructor)
        : num_(Polynomial::constant(c)), den_(Polynomial::constant(GaussianRational(1))) {}
    RationalFunction(Polynomial p)  // NOLINT(google-explicit-constructor)
        : num_(std::move(p)), den_(Polynomial::constant(GaussianRational(1))) {}

    /// Canonicalizes num/den; throws std::domain_error("division by zero
    /// polynomial") when den is zero.
    static RationalFunction normalize(const Polynomial& num, const Polynomial& den);
    /// The formal variable z.
    static RationalFunction variable();
    /// 1 / (z + c)^order.
    static RationalFunction inverse_linear(const GaussianRational& c, int order = 1);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    /// Numerator degree < denominator degree (zero counts as proper).
    bool is_proper() const { return num_.degree() < den_.degree(); }
    GaussianRational constant_value() const;  // requires is_constant()

    /// f(z + h).
    RationalFunction shifted(const GaussianRational& h) const;
    /// f(s * z) for a nonzero scalar s.
    RationalFunction scaled_argument(const GaussianRational& s) const;
    /// Throws PoleError("evaluation at pole").
    GaussianRational operator()(const GaussianRational& x) const;
    bool has_pole_at(const GaussianRational& x) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const;

private:
    RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction shift(const RationalFunction& f, const GaussianRational& h) { return f.shifted(h); }
inline GaussianRational evaluate(const RationalFunction& f, const GaussianRational& x) { return f(x); }

/// Root of a polynomial with multiplicity.
struct Root {
    GaussianRational value;
    int multiplicity = 1;
};

/// Gaussian-rational roots of p (real rational roots only; non-real
/// roots are left in the residual). Returns the roots and the monic residual
/// factor that has no such roots.
struct RootSplit {
    std::vector<Root> roots;
    Polynomial residual;
};
RootSplit rational_roots(const Polynomial& p);

/// One term coefficient / (z - pole)^order.
struct PartialFractionTerm {
    GaussianRational pole;
    int order = 1;
    GaussianRational coefficient;
};

struct PartialFractionForm {
    Polynomial polynomial_part;
    /// Sorted by (pole, order); zero coefficients omitted.
    std::vector<PartialFractionTerm> terms;

    RationalFunction recombine() const;
    std::string str(const std::string& var = "z") const;
};

/// Throws UnsupportedDenominator if the denominator does not split into
/// linear factors over the Gaussian rationals.
PartialFractionForm partial_fractions(const RationalFunction& f);

}  // namespace qtoeplitz
