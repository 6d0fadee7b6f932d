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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoeplitz/radial.hpp"

namespace qtoeplitz {

/// Symbol f(r e^{i theta}) = sum_n e^{i n theta} f_n(r) with finitely many
/// nonzero radial components.
class PolarSymbol {
public:
    PolarSymbol() = default;
    explicit PolarSymbol(std::map<int, RadialSymbol> components);
    /// c * e^{i p theta} r^a (log r)^m
    static PolarSymbol monomial(int degree, const GaussianRational& c, const Rational& exponent, int log_power = 0);
    /// c * z^l  (degree l, radial r^l)
    static PolarSymbol z_power(int l, const GaussianRational& c = 1);
    /// c * zbar^l  (degree -l, radial r^l)
    static PolarSymbol zbar_power(int l, const GaussianRational& c = 1);
    static PolarSymbol constant(const GaussianRational& c) { return monomial(0, c, Rational(0)); }

    const std::map<int, RadialSymbol>& components() const { return c_; }
    const RadialSymbol* component(int degree) const;
    bool is_zero() const { return c_.empty(); }
    int min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    PolarSymbol& operator+=(const PolarSymbol& o);
    friend PolarSymbol operator+(PolarSymbol a, const PolarSymbol& b) { return a += b; }
    friend PolarSymbol operator*(const GaussianRational& s, const PolarSymbol& a);
    friend bool operator==(const PolarSymbol& a, const PolarSymbol& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolarSymbol& a, const PolarSymbol& b) { return !(a == b); }

private:
    std::map<int, RadialSymbol> c_;
};

/// A function of the basis index k >= 0 that is rational in u = 2k on each of
/// finitely many segments [start_i, start_{i+1}); zero before the first
/// start, the last segment runs to infinity.
class PiecewiseWeight {
public:
    struct Segment {
        long start = 0;
        RationalFunction tail;  // in u = 2k
        friend bool operator==(const Segment& a, const Segment& b) { return a.start == b.start && a.tail == b.tail; }
    };

    PiecewiseWeight() = default;
    explicit PiecewiseWeight(std::vector<Segment> segments);
    static PiecewiseWeight from(long start, const RationalFunction& tail);

    const std::vector<Segment>& segments() const { return s_; }
    bool is_zero() const { return s_.empty(); }
    /// Tail rational function (zero if the weight is zero).
    RationalFunction tail() const;
    long tail_start() const { return s_.empty() ? 0 : s_.back().start; }
    /// Value at index k (throws PoleError if k hits a pole of its segment).
    GaussianRational operator()(long k) const;

    /// k -> W(k + q)
    PiecewiseWeight index_shifted(long q) const;
    /// Zero out indices below m.
    PiecewiseWeight restricted_from(long m) const;

    PiecewiseWeight& operator+=(const PiecewiseWeight& o);
    friend PiecewiseWeight operator+(PiecewiseWeight a, const PiecewiseWeight& b) { return a += b; }
    friend PiecewiseWeight operator-(const PiecewiseWeight& a, const PiecewiseWeight& b);
    friend PiecewiseWeight operator*(const PiecewiseWeight& a, const PiecewiseWeight& b);
    friend PiecewiseWeight operator*(const GaussianRational& s, const PiecewiseWeight& a);
    friend bool operator==(const PiecewiseWeight& a, const PiecewiseWeight& b) { return a.s_ == b.s_; }

    /// Same values at every k >= 0.
    bool same_values(const PiecewiseWeight& o) const;

    std::string str() const;

private:
    void canonicalize();
    std::vector<Segment> s_;
};

/// Operator acting on the monomial basis by T(z^k) = sum_p W_p(k) z^{k+p}.
class GradedOperator {
public:
    GradedOperator() = default;
    explicit GradedOperator(std::map<int, PiecewiseWeight> parts);
    static GradedOperator identity();
    static GradedOperator scalar(const GaussianRational& c);

    const std::map<int, PiecewiseWeight>& parts() const { return parts_; }
    const PiecewiseWeight& part(int degree) const;
    bool is_zero() const { return parts_.empty(); }
    int min_degree() const { return parts_.empty() ? 0 : parts_.begin()->first; }
    int max_degree() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }
    /// Keep only degrees in [lo, hi].
    GradedOperator window(int lo, int hi) const;

    GradedOperator& operator+=(const GradedOperator& o);
    friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator*(const GaussianRational& s, const GradedOperator& a);

    std::string str() const;

private:
    void canonicalize();
    std::map<int, PiecewiseWeight> parts_;
};

/// Toeplitz operator of a polar symbol via the quasihomogeneous action:
/// degree p weight (u+2p+2) * mellin(f_p)(u+p+2) from k = max(0,-p).
GradedOperator from_symbol(const PolarSymbol& f);
/// Degree-p weight of T_{e^{ip theta} phi}.
PiecewiseWeight toeplitz_weight(int degree, const RadialSymbol& phi);

/// Coefficients of T(z^k): output degree p -> coefficient of z^{k+p}.
std::map<int, GaussianRational> apply(const GradedOperator& t, long k);

/// S o T.
GradedOperator compose(const GradedOperator& s, const GradedOperator& t);
/// Degree-d component of S o T only.
PiecewiseWeight compose_component(const GradedOperator& s, const GradedOperator& t, int degree);
GradedOperator power(const GradedOperator& t, int n);
GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);
PiecewiseWeight commutator_component(const GradedOperator& a, const GradedOperator& b, int degree);
bool equals(const GradedOperator& a, const GradedOperator& b);

/// Entry (k+p, k) = W_p(k) for 0 <= k, k+p <= dim.
std::vector<std::vector<GaussianRational>> to_matrix(const GradedOperator& t, long dim);

struct ToeplitzRecovery {
    bool ok = false;
    PolarSymbol symbol;
    /// On failure: the offending degree, and the first mismatching index or
    /// the non-admissible terms.
    int degree = 0;
    std::optional<long> index;
    std::vector<RadialTerm> witness;
    std::string message;
};

ToeplitzRecovery toeplitz_symbol_of(const GradedOperator& t);

struct SquareCheck {
    int m = 0;  // number of anti-analytic terms
    ToeplitzRecovery recovery;
};

/// Checks whether T_g^2 is Toeplitz for g = e^{i theta} r^3 + sum_l a_l zbar^l.
/// Throws std::invalid_argument if g has any other shape.
SquareCheck square_check(const PolarSymbol& g);

}  // namespace qtoeplitz
