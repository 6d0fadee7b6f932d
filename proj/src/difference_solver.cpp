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

#include "qtoeplitz/difference_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtoeplitz/linear_system.hpp"

namespace qtoeplitz {

RationalFunction AffineFamily::member(const std::vector<GaussianRational>& coefficients) const {
    RationalFunction x = base;
    for (std::size_t i = 0; i < generators.size() && i < coefficients.size(); ++i)
        x += generators[i].second * RationalFunction(coefficients[i]);
    return x;
}

bool certify_residual(const DifferenceEquation& eq, const RationalFunction& x) {
    RationalFunction r = eq.a * x.shifted(GaussianRational(eq.step)) + eq.b * x - eq.rhs;
    return r.is_zero();
}

Polynomial universal_denominator(const Polynomial& a, const Polynomial& b, const Rational& step) {
    const GaussianRational h(step);
    Polynomial abar = a.shifted(-h);
    Polynomial bbar = b;
    if (abar.degree() <= 0 || bbar.degree() <= 0) return Polynomial::constant(1);
    RootSplit ra = rational_roots(abar);
    RootSplit rb = rational_roots(bbar);
    if (ra.residual.degree() > 0 && rb.residual.degree() > 0)
        throw UnsupportedDenominator("unsupported denominator: cannot compute dispersion of " +
                                     ra.residual.str() + " and " + rb.residual.str());
    long dispersion = -1;
    for (const Root& x : ra.roots)
        for (const Root& y : rb.roots) {
            GaussianRational n = (y.value - x.value) / h;
            if (!n.is_integer()) continue;
            long v = n.re().get_num().get_si();
            if (v >= 0) dispersion = std::max(dispersion, v);
        }
    Polynomial u = Polynomial::constant(1);
    for (long n = dispersion; n >= 0; --n) {
        const GaussianRational nh = GaussianRational(n) * h;
        Polynomial d = gcd(abar, bbar.shifted(nh));
        if (d.degree() <= 0) continue;
        abar = exact_div(abar, d);
        bbar = exact_div(bbar, d.shifted(-nh));
        for (long i = 0; i <= n; ++i) u = u * d.shifted(-GaussianRational(i) * h);
    }
    return u.monic();
}

namespace {

int degree_bound(const Polynomial& ahat, const Polynomial& bhat, int deg_c, const Rational& step) {
    const int da = ahat.degree();
    Polynomial sum = ahat + bhat;
    const int s = sum.degree();
    int bound = 0;
    if (s > da - 1) {
        bound = deg_c - s;
    } else if (s < da - 1) {
        bound = deg_c - da + 1;
    } else {
        bound = deg_c - s;
        GaussianRational n0 = -sum.leading() / (GaussianRational(step) * ahat.leading());
        if (n0.is_integer() && sgn(n0.re()) >= 0) bound = std::max(bound, static_cast<int>(n0.re().get_num().get_si()));
    }
    return std::max(bound, 0);
}

Polynomial as_polynomial(const RationalFunction& f) {
    if (!f.is_polynomial()) throw std::logic_error("expected a polynomial after clearing denominators");
    return f.numerator() * f.denominator().leading().inverse();
}

}  // namespace

ParametricSolution solve_parametric(const RationalFunction& a, const RationalFunction& b,
                                    const std::vector<RationalFunction>& rhs, const Rational& step) {
    if (a.is_zero()) throw std::invalid_argument("difference equation needs a nonzero shift coefficient");
    const GaussianRational h(step);
    Polynomial common = lcm(a.denominator(), b.denominator());
    for (const auto& r : rhs) common = lcm(common, r.denominator());
    const RationalFunction cf(common);
    Polynomial A = as_polynomial(a * cf);
    Polynomial B = as_polynomial(b * cf);
    std::vector<Polynomial> C;
    for (const auto& r : rhs) C.push_back(as_polynomial(r * cf));

    Polynomial U = universal_denominator(A, B, step);
    Polynomial Uh = U.shifted(h);
    Polynomial L = lcm(U, Uh);
    Polynomial Ahat = A * exact_div(L, Uh);
    Polynomial Bhat = B * exact_div(L, U);
    std::vector<Polynomial> Chat;
    int deg_c = -1;
    for (const auto& c : C) {
        Chat.push_back(c * L);
        deg_c = std::max(deg_c, Chat.back().degree());
    }
    const int n = degree_bound(Ahat, Bhat, deg_c, step);

    // Columns: p_0..p_n, then c_1..c_m.
    std::vector<Polynomial> columns;
    Polynomial zj = Polynomial::constant(1), zhj = Polynomial::constant(1);
    const Polynomial zh = Polynomial::linear(h), z = Polynomial({0, 1});
    for (int j = 0; j <= n; ++j) {
        columns.push_back(Ahat * zhj + Bhat * zj);
        zj = zj * z;
        zhj = zhj * zh;
    }
    for (const auto& c : Chat) columns.push_back(-c);
    int rows = 0;
    for (const auto& c : columns) rows = std::max(rows, c.degree() + 1);
    const std::size_t ncols = columns.size();
    const std::size_t np = static_cast<std::size_t>(n) + 1;
    Matrix m(static_cast<std::size_t>(rows), Row(ncols));
    for (std::size_t j = 0; j < ncols; ++j)
        for (int t = 0; t <= columns[j].degree(); ++t) m[static_cast<std::size_t>(t)][j] = columns[j].coeff(t);

    std::vector<std::size_t> pivots = rref(m, ncols);
    ParametricSolution out;
    std::vector<bool> pivot_p(np, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < np) {
            pivot_p[pivots[r]] = true;
        } else {
            out.compatibility.emplace_back(m[r].begin() + static_cast<long>(np), m[r].end());
        }
    }
    auto build = [&](const std::vector<GaussianRational>& p) {
        return RationalFunction::normalize(Polynomial(p), U);
    };
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        std::vector<GaussianRational> p(np);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < np) p[pivots[r]] = -m[r][np + i];
        out.particular.push_back(build(p));
    }
    for (std::size_t f = 0; f < np; ++f) {
        if (pivot_p[f]) continue;
        std::vector<GaussianRational> p(np);
        p[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (pivots[r] < np) p[pivots[r]] = -m[r][f];
        out.homogeneous.push_back(build(p));
    }
    return out;
}

AffineFamily homogeneous_solutions(const DifferenceEquation& eq) {
    ParametricSolution s = solve_parametric(eq.a, eq.b, {}, eq.step);
    AffineFamily fam;
    for (std::size_t i = 0; i < s.homogeneous.size(); ++i)
        fam.generators.emplace_back("c" + std::to_string(i), s.homogeneous[i]);
    return fam;
}

std::optional<AffineFamily> solve(const DifferenceEquation& eq) {
    ParametricSolution s = solve_parametric(eq.a, eq.b, {eq.rhs}, eq.step);
    for (const auto& row : s.compatibility)
        if (!row.empty() && !row[0].is_zero()) return std::nullopt;
    AffineFamily fam;
    fam.base = s.particular.at(0);
    for (std::size_t i = 0; i < s.homogeneous.size(); ++i)
        fam.generators.emplace_back("c" + std::to_string(i), s.homogeneous[i]);
    return fam;
}

}  // namespace qtoeplitz
