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

#include "qtoeplitz/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qtoeplitz {

RadialSymbol::RadialSymbol(std::vector<RadialTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

RadialSymbol RadialSymbol::monomial(const GaussianRational& c, const Rational& exponent, int log_power) {
    if (log_power < 0) throw std::invalid_argument("negative log power");
    return RadialSymbol({RadialTerm{c, exponent, log_power}});
}

void RadialSymbol::canonicalize() {
    for (auto& t : terms_) t.exponent.canonicalize();
    std::sort(terms_.begin(), terms_.end(), [](const RadialTerm& a, const RadialTerm& b) {
        return a.exponent < b.exponent || (a.exponent == b.exponent && a.log_power < b.log_power);
    });
    std::vector<RadialTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exponent == t.exponent && merged.back().log_power == t.log_power)
            merged.back().coefficient += t.coefficient;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const RadialTerm& t) { return t.coefficient.is_zero(); });
    terms_ = std::move(merged);
}

RadialSymbol& RadialSymbol::operator+=(const RadialSymbol& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
}

RadialSymbol operator*(const GaussianRational& s, const RadialSymbol& a) {
    std::vector<RadialTerm> t = a.terms_;
    for (auto& x : t) x.coefficient *= s;
    return RadialSymbol(std::move(t));
}

std::complex<double> RadialSymbol::operator()(double r) const {
    std::complex<double> sum = 0;
    const double lr = std::log(r);
    for (const auto& t : terms_)
        sum += t.coefficient.to_complex() * std::pow(r, t.exponent.get_d()) * std::pow(lr, t.log_power);
    return sum;
}

std::string RadialSymbol::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first reads more naturally ("r^3 + 1").
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& t = *it;
        bool negative = t.coefficient.is_real() && sgn(t.coefficient.re()) < 0;
        GaussianRational mag = negative ? -t.coefficient : t.coefficient;
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        bool has_r = t.exponent != 0;
        bool has_log = t.log_power > 0;
        if (!has_r && !has_log) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        if (has_r) {
            os << "r";
            if (t.exponent != 1) os << "^" << t.exponent.get_str();
        }
        if (has_log) {
            if (has_r) os << "*";
            os << "log(r)";
            if (t.log_power > 1) os << "^" << t.log_power;
        }
    }
    return os.str();
}

namespace {

Rational factorial(int m) {
    Rational f(1);
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

}  // namespace

RationalFunction mellin(const RadialSymbol& phi) {
    RationalFunction sum;
    for (const auto& t : phi.terms()) {
        Rational scale = factorial(t.log_power);
        if (t.log_power % 2 == 1) scale = -scale;
        sum += RationalFunction::inverse_linear(GaussianRational(t.exponent), t.log_power + 1) *
               RationalFunction(t.coefficient * GaussianRational(scale));
    }
    return sum;
}

RadialSymbol inverse_mellin(const RationalFunction& image) {
    if (!image.is_proper()) throw NoRadialPreimage("no radial preimage: " + image.str() + " is not proper");
    PartialFractionForm pf = partial_fractions(image);
    std::vector<RadialTerm> terms;
    for (const auto& t : pf.terms) {
        if (!t.pole.is_real()) throw NoRadialPreimage("no radial preimage: non-real pole " + t.pole.str());
        const int m = t.order - 1;
        Rational scale = Rational(1) / factorial(m);
        if (m % 2 == 1) scale = -scale;
        terms.push_back({t.coefficient * GaussianRational(scale), -t.pole.re(), m});
    }
    return RadialSymbol(std::move(terms));
}

Admissibility is_admissible(const RadialSymbol& phi) {
    Admissibility a;
    for (const auto& t : phi.terms())
        if (t.exponent <= -2) a.witness.push_back(t);
    a.admissible = a.witness.empty();
    return a;
}

}  // namespace qtoeplitz
