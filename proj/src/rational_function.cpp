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

#include "qtoeplitz/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qtoeplitz {

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};
    if (den.degree() == 0) return RationalFunction(num * den.leading().inverse(), Polynomial::constant(1), 0);
    Polynomial g = gcd(num, den);
    Polynomial n = num, d = den;
    if (g.degree() > 0) {
        n = exact_div(num, g);
        d = exact_div(den, g);
    }
    GaussianRational inv = d.leading().inverse();
    return RationalFunction(n * inv, d * inv, 0);
}

RationalFunction RationalFunction::variable() { return RationalFunction(Polynomial({0, 1})); }

RationalFunction RationalFunction::inverse_linear(const GaussianRational& c, int order) {
    return RationalFunction(Polynomial::constant(1), pow(Polynomial::linear(c), static_cast<unsigned>(order)), 0);
}

GaussianRational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    return num_.coeff(0);
}

RationalFunction RationalFunction::shifted(const GaussianRational& h) const {
    if (h.is_zero() || is_zero()) return *this;
    // Shifting preserves coprimality and monicity.
    return RationalFunction(num_.shifted(h), den_.shifted(h), 0);
}

RationalFunction RationalFunction::scaled_argument(const GaussianRational& s) const {
    if (s.is_zero()) throw std::domain_error("zero argument scale");
    auto scale = [&](const Polynomial& p) {
        std::vector<GaussianRational> c = p.coefficients();
        GaussianRational f(1);
        for (auto& x : c) {
            x *= f;
            f *= s;
        }
        return Polynomial(std::move(c));
    };
    return normalize(scale(num_), scale(den_));
}

GaussianRational RationalFunction::operator()(const GaussianRational& x) const {
    GaussianRational d = den_(x);
    if (d.is_zero()) throw PoleError("evaluation at pole");
    return num_(x) / d;
}

bool RationalFunction::has_pole_at(const GaussianRational& x) const { return den_(x).is_zero(); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        if (den_.degree() == 0) {
            num_ += o.num_;
            return *this;
        }
        return *this = normalize(num_ + o.num_, den_);
    }
    Polynomial g = gcd(den_, o.den_);
    Polynomial a = exact_div(o.den_, g);
    Polynomial b = exact_div(den_, g);
    return *this = normalize(num_ * a + o.num_ * b, den_ * a);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (o.is_constant()) {
        num_ *= o.constant_value();
        return *this;
    }
    if (is_constant()) {
        GaussianRational c = constant_value();
        *this = o;
        num_ *= c;
        return *this;
    }
    // Cross-cancel so the product of coprime pairs is already coprime.
    Polynomial g1 = gcd(num_, o.den_);
    Polynomial g2 = gcd(o.num_, den_);
    Polynomial n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Polynomial d = exact_div(den_, g2) * exact_div(o.den_, g1);
    GaussianRational inv = d.leading().inverse();
    return *this = RationalFunction(n * inv, d * inv, 0);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    RationalFunction inv = normalize(o.den_, o.num_);
    return *this *= inv;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    auto wrap = [&](const Polynomial& p) {
        std::string s = p.str(var);
        bool bare = p.degree() <= 0 || (p.coefficients().size() == static_cast<std::size_t>(p.degree() + 1) &&
                                         std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                                       [](const GaussianRational& c) { return !c.is_zero(); }) == 1);
        return bare ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t to_mod(const mpz_class& v) {
    std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), kPrime);
    return r;
}

std::uint64_t to_mod(long v) {
    long r = v % static_cast<long>(kPrime);
    if (r < 0) r += static_cast<long>(kPrime);
    return static_cast<std::uint64_t>(r);
}

double log2_abs(const mpz_class& v) {
    long exp = 0;
    double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(std::fabs(m)) + static_cast<double>(exp);
}

// Rational roots of a nonzero real polynomial with rational coefficients.
std::vector<Rational> candidate_real_roots(const Polynomial& p) {
    // Integer primitive form c_0..c_n.
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) l = lcm(l, c.re().get_den());
    std::vector<mpz_class> c;
    for (const auto& x : p.coefficients()) {
        Rational v = x.re() * l;
        c.push_back(v.get_num());
    }
    std::vector<Rational> out;
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) out.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return out;

    // Fujiwara bound on root magnitude.
    double lead = log2_abs(c[static_cast<std::size_t>(n)]);
    double bound_log = -1e300;
    for (int i = 1; i <= n; ++i) {
        const mpz_class& ci = c[static_cast<std::size_t>(n - i)];
        if (ci == 0) continue;
        double t = (log2_abs(ci) - lead - (i == n ? 1.0 : 0.0)) / i;
        bound_log = std::max(bound_log, t);
    }
    double bound = std::ceil(2.0 * std::exp2(bound_log)) + 1.0;
    if (bound > 1e6) bound = 1e6;
    const long bmax = static_cast<long>(bound);

    std::vector<std::uint64_t> cm(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) cm[i] = to_mod(c[i]);

    mpz_class lead_abs = abs(c[static_cast<std::size_t>(n)]);
    mpz_class c0_abs = abs(c[0]);
    for (long q = 1; q <= 256; ++q) {
        if (mpz_divisible_ui_p(lead_abs.get_mpz_t(), static_cast<unsigned long>(q)) == 0) continue;
        std::vector<std::uint64_t> qpow(static_cast<std::size_t>(n) + 1);
        qpow[0] = 1;
        for (int i = 1; i <= n; ++i) qpow[static_cast<std::size_t>(i)] = mulmod(qpow[static_cast<std::size_t>(i - 1)], to_mod(q));
        const long range = bmax * q;
        if (range > 4000000) break;
        for (long num = -range; num <= range; ++num) {
            if (num == 0 || std::gcd(std::labs(num), q) != 1) continue;
            if (mpz_divisible_ui_p(c0_abs.get_mpz_t(), static_cast<unsigned long>(std::labs(num))) == 0) continue;
            std::uint64_t pm = to_mod(num);
            std::uint64_t v = cm[static_cast<std::size_t>(n)];
            for (int i = n - 1; i >= 0; --i) {
                v = mulmod(v, pm);
                v += mulmod(cm[static_cast<std::size_t>(i)], qpow[static_cast<std::size_t>(n - i)]);
                if (v >= kPrime) v -= kPrime;
            }
            if (v == 0) out.emplace_back(num, q);
        }
    }
    for (auto& r : out) r.canonicalize();
    return out;
}

Polynomial real_part(const Polynomial& p) {
    std::vector<GaussianRational> c;
    for (const auto& x : p.coefficients()) c.emplace_back(x.re());
    return Polynomial(std::move(c));
}

Polynomial imag_part(const Polynomial& p) {
    std::vector<GaussianRational> c;
    for (const auto& x : p.coefficients()) c.emplace_back(x.im());
    return Polynomial(std::move(c));
}

}  // namespace

RootSplit rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    RootSplit split;
    Polynomial rest = p.monic();
    Polynomial search = rest.is_real() ? rest : gcd(real_part(rest), imag_part(rest));
    if (search.degree() <= 0) {
        split.residual = rest;
        return split;
    }
    for (const Rational& r : candidate_real_roots(search)) {
        GaussianRational root(r);
        Polynomial factor = Polynomial::linear(-root);
        int mult = 0;
        while (rest.degree() > 0) {
            auto [q, rem] = divmod(rest, factor);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult > 0) split.roots.push_back({root, mult});
    }
    std::sort(split.roots.begin(), split.roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    split.residual = rest.monic();
    return split;
}

RationalFunction PartialFractionForm::recombine() const {
    RationalFunction f(polynomial_part);
    for (const auto& t : terms) {
        RationalFunction term = RationalFunction::inverse_linear(-t.pole, t.order);
        f += term * RationalFunction(t.coefficient);
    }
    return f;
}

std::string PartialFractionForm::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    if (!polynomial_part.is_zero()) {
        os << polynomial_part.str(var);
        first = false;
    }
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << t.coefficient << "/(" << Polynomial::linear(-t.pole).str(var) << ")";
        if (t.order > 1) os << "^" << t.order;
    }
    if (first) os << "0";
    return os.str();
}

PartialFractionForm partial_fractions(const RationalFunction& f) {
    PartialFractionForm out;
    auto [poly, rem] = divmod(f.numerator(), f.denominator());
    out.polynomial_part = poly;
    if (rem.is_zero()) return out;
    RootSplit split = rational_roots(f.denominator());
    if (split.residual.degree() > 0)
        throw UnsupportedDenominator("unsupported denominator: factor " + split.residual.str() +
                                     " has no Gaussian-rational roots");
    // For each pole a of order m: g(z) = rem(z) * (z-a)^m / den(z); the
    // coefficient of 1/(z-a)^(m-j) is g^{(j)}(a)/j!, computed by Taylor
    // expanding g around a via the shifted polynomials.
    for (const Root& root : split.roots) {
        Polynomial cofactor = Polynomial::constant(1);
        for (const Root& other : split.roots)
            if (other.value != root.value)
                cofactor = cofactor * pow(Polynomial::linear(-other.value), static_cast<unsigned>(other.multiplicity));
        // Expand rem(a+t) and 1/cofactor(a+t) as series in t up to order m-1.
        const int m = root.multiplicity;
        Polynomial num_t = rem.shifted(root.value);
        Polynomial den_t = cofactor.shifted(root.value);
        // Power-series division num_t / den_t.
        std::vector<GaussianRational> series(static_cast<std::size_t>(m));
        GaussianRational d0inv = den_t.coeff(0).inverse();
        for (int j = 0; j < m; ++j) {
            GaussianRational s = num_t.coeff(j);
            for (int i = 1; i <= j; ++i) s -= den_t.coeff(i) * series[static_cast<std::size_t>(j - i)];
            series[static_cast<std::size_t>(j)] = s * d0inv;
        }
        for (int j = 0; j < m; ++j) {
            if (series[static_cast<std::size_t>(j)].is_zero()) continue;
            out.terms.push_back({root.value, m - j, series[static_cast<std::size_t>(j)]});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const PartialFractionTerm& a, const PartialFractionTerm& b) {
        return a.pole < b.pole || (a.pole == b.pole && a.order < b.order);
    });
    return out;
}

}  // namespace qtoeplitz
