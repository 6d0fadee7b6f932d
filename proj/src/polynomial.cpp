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

#include "qtoeplitz/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qtoeplitz {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const GaussianRational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const GaussianRational& c) { return Polynomial({c, GaussianRational(1)}); }

Polynomial Polynomial::monomial(const GaussianRational& c, int power) {
    std::vector<GaussianRational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Polynomial::coeff(int power) const {
    if (power < 0 || power > degree()) return {};
    return c_[static_cast<std::size_t>(power)];
}

GaussianRational Polynomial::leading() const { return c_.empty() ? GaussianRational() : c_.back(); }

bool Polynomial::is_real() const {
    for (const auto& c : c_)
        if (!c.is_real()) return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (c_.empty() || c_.back().is_one()) return *this;
    GaussianRational inv = c_.back().inverse();
    Polynomial r = *this;
    for (auto& c : r.c_) c *= inv;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const GaussianRational& h) const {
    if (h.is_zero() || c_.size() <= 1) return *this;
    // Horner in place: after step j, a[j..n] holds the coefficients of the
    // partially shifted tail (Taylor shift).
    std::vector<GaussianRational> a = c_;
    const std::size_t n = a.size();
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = n - 1; i > j; --i) a[i - 1] += h * a[i];
    return Polynomial(std::move(a));
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
    GaussianRational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string Polynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const GaussianRational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        GaussianRational mag = negative ? -c : c;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (i == 0) {
            os << mag;
        } else {
            if (!mag.is_one()) os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.degree() < den.degree()) return {Polynomial(), num};
    std::vector<GaussianRational> r = num.coefficients();
    const auto& d = den.coefficients();
    const int dd = den.degree();
    GaussianRational inv = d.back().inverse();
    std::vector<GaussianRational> q(static_cast<std::size_t>(num.degree() - dd + 1));
    for (int i = num.degree(); i >= dd; --i) {
        GaussianRational f = r[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        f *= inv;
        q[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= f * d[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.monic(), y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_div(a * b, gcd(a, b)).monic();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial r = Polynomial::constant(GaussianRational(1));
    for (unsigned i = 0; i < exponent; ++i) r = r * p;
    return r;
}

}  // namespace qtoeplitz
