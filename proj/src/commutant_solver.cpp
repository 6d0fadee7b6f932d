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

#include "qtoeplitz/commutant_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtoeplitz {

namespace {

const Rational kStep(2);

RationalFunction analytic_weight() { return toeplitz_weight(1, RadialSymbol::monomial(1, Rational(3))).tail(); }

std::string parameter_name(int top, int p) {
    if (top == 1) {
        if (p >= 0) return "C_" + std::to_string(p);
        return "A_" + std::to_string(-p);
    }
    if (p == top || p == top - 1) return "C_" + std::to_string(p);
    return "B_{" + std::to_string(top) + "," + std::to_string(p) + "}";
}

Row padded(Row r, std::size_t n) {
    r.resize(n);
    return r;
}

bool all_zero(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const GaussianRational& x) { return x.is_zero(); });
}

std::string power_text(std::size_t j) {
    if (j == 0) return "I";
    if (j == 1) return "Tg";
    return "Tg^" + std::to_string(j);
}

std::string linear_text(const std::vector<std::pair<GaussianRational, std::string>>& terms) {
    std::string out;
    for (const auto& [c, name] : terms) {
        if (c.is_zero()) continue;
        std::string t;
        if (c.is_one()) {
            t = name;
        } else if ((-c).is_one()) {
            t = "-" + name;
        } else {
            t = c.str() + "*" + name;
        }
        if (out.empty()) {
            out = t;
        } else if (t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

PolarSymbol CommutantProblem::g() const {
    PolarSymbol s = PolarSymbol::monomial(1, 1, Rational(3));
    for (std::size_t l = 0; l < g_tail.size(); ++l)
        if (!g_tail[l].is_zero()) s += PolarSymbol::zbar_power(static_cast<int>(l) + 1, g_tail[l]);
    return s;
}

void CommutantProblem::validate() const {
    if (top < 1) throw std::invalid_argument("ansatz top degree must be at least 1");
    if (depth < 0) throw std::invalid_argument("ansatz depth must be nonnegative");
    if (static_cast<int>(g_tail.size()) < top + depth)
        throw std::invalid_argument("g depth too small: need a_1..a_" + std::to_string(top + depth) + ", got " +
                                    std::to_string(g_tail.size()) + " coefficients");
}

GradedOperator ParametricOperator::member(const Row& c) const {
    GradedOperator out;
    for (std::size_t i = 0; i < columns.size() && i < c.size(); ++i)
        if (!c[i].is_zero()) out += c[i] * columns[i];
    return out;
}

DifferenceEquation DegreeEquation::combined(const Row& c) const {
    DifferenceEquation eq{a, b, RationalFunction(), kStep};
    for (std::size_t i = 0; i < rhs.size() && i < c.size(); ++i) eq.rhs += RationalFunction(c[i]) * rhs[i];
    return eq;
}

DegreeEquation degree_equation(const CommutantProblem& problem, int degree, const ParametricOperator& upstream) {
    const int p = degree - 1;
    for (const auto& col : upstream.columns)
        if (!col.is_zero() && col.min_degree() <= p)
            throw std::invalid_argument("degree_equation: upstream already has a part of degree " +
                                        std::to_string(col.min_degree()) + " <= " + std::to_string(p));
    const GradedOperator tg = from_symbol(problem.g());
    const RationalFunction w = analytic_weight();
    DegreeEquation eq;
    eq.degree = degree;
    eq.unknown = p;
    // [Y, T_{e^{i theta} r^3}] at degree p+1 is w(u) Y(u+2) - w(u+2p) Y(u).
    eq.a = w;
    eq.b = -w.shifted(GaussianRational(2 * p));
    for (const auto& col : upstream.columns) eq.rhs.push_back(-commutator_component(col, tg, degree).tail());
    return eq;
}

RationalFunction weight_to_mellin(int p, const RationalFunction& y) {
    return y.shifted(GaussianRational(-p - 2)) / RationalFunction(Polynomial::linear(GaussianRational(p)));
}

RationalFunction mellin_to_weight(int p, const RationalFunction& f) {
    return RationalFunction(Polynomial::linear(GaussianRational(2 * p + 2))) * f.shifted(GaussianRational(p + 2));
}

std::size_t ConstraintLedger::add_parameter(const std::string& name) {
    parameters.push_back(name);
    known_zero_.push_back(false);
    return parameters.size() - 1;
}

bool ConstraintLedger::add(LedgerEntry e) {
    e.coefficients = padded(std::move(e.coefficients), parameters.size());
    if (all_zero(e.coefficients)) return false;
    entries.push_back(std::move(e));
    return true;
}

Matrix ConstraintLedger::rows() const {
    Matrix m;
    for (const auto& e : entries) m.push_back(padded(e.coefficients, parameters.size()));
    return m;
}

std::vector<Row> ConstraintLedger::solution_space() const {
    Matrix m = rows();
    if (m.empty()) {
        std::vector<Row> basis;
        for (std::size_t i = 0; i < parameters.size(); ++i) {
            Row r(parameters.size());
            r[i] = 1;
            basis.push_back(r);
        }
        return basis;
    }
    return nullspace(m, parameters.size());
}

bool ConstraintLedger::forces_zero(std::size_t parameter) const {
    for (const auto& v : solution_space())
        if (!v[parameter].is_zero()) return false;
    return true;
}

std::vector<std::size_t> ConstraintLedger::record_forced(int degree) {
    known_zero_.resize(parameters.size(), false);
    std::vector<Row> space = solution_space();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (known_zero_[i]) continue;
        bool zero = std::all_of(space.begin(), space.end(), [&](const Row& v) { return v[i].is_zero(); });
        if (!zero) continue;
        known_zero_[i] = true;
        Row r(parameters.size());
        r[i] = 1;
        entries.push_back({r, "derived", parameters[i] + " = 0", degree});
        out.push_back(i);
    }
    return out;
}

std::string ConstraintLedger::format(const Row& coefficients) const {
    std::vector<std::pair<GaussianRational, std::string>> terms;
    for (std::size_t i = 0; i < coefficients.size() && i < parameters.size(); ++i)
        terms.emplace_back(coefficients[i], parameters[i]);
    return linear_text(terms) + " = 0";
}

std::vector<LedgerEntry> admissibility_constraints(const DegreeFamily& family) {
    const std::size_t n = family.mellin.size();
    std::map<std::pair<GaussianRational, int>, Row> poles;
    std::map<int, Row> polynomial;
    for (std::size_t i = 0; i < n; ++i) {
        if (family.mellin[i].is_zero()) continue;
        PartialFractionForm pf = partial_fractions(family.mellin[i]);
        for (int t = 0; t <= pf.polynomial_part.degree(); ++t) {
            Row& r = polynomial[t];
            r.resize(n);
            r[i] = pf.polynomial_part.coeff(t);
        }
        for (const auto& term : pf.terms) {
            if (term.pole.re() < 2) continue;
            Row& r = poles[{term.pole, term.order}];
            r.resize(n);
            r[i] = term.coefficient;
        }
    }
    std::vector<LedgerEntry> out;
    const std::string fname = "f_" + std::to_string(family.degree);
    for (const auto& [t, r] : polynomial)
        out.push_back({r, "admissibility", fname + ": polynomial part z^" + std::to_string(t) + " has no radial preimage",
                       family.degree + 1});
    // Highest order first at each pole: the leading log power is the worst term.
    for (auto it = poles.rbegin(); it != poles.rend(); ++it) {
        const auto& [key, r] = *it;
        std::string term = "r^" + (-key.first).str();
        if (key.second > 1) term += "*log(r)^" + std::to_string(key.second - 1);
        out.push_back({r, "admissibility", fname + ": coefficient of " + term, family.degree + 1});
    }
    return out;
}

std::vector<LedgerEntry> boundary_constraints(const CommutantProblem& problem, int degree, const ParametricOperator& f) {
    const GradedOperator tg = from_symbol(problem.g());
    const long lo = std::max(0, -degree);
    long end = lo;
    std::vector<PiecewiseWeight> comps;
    for (const auto& col : f.columns) {
        comps.push_back(commutator_component(col, tg, degree));
        if (!comps.back().is_zero()) end = std::max(end, comps.back().tail_start());
    }
    std::vector<LedgerEntry> out;
    for (long k = lo; k < end; ++k) {
        Row r(comps.size());
        bool pole = false;
        for (std::size_t i = 0; i < comps.size() && !pole; ++i) {
            try {
                r[i] = comps[i](k);
            } catch (const PoleError&) {
                pole = true;
            }
        }
        if (pole) continue;
        out.push_back({r, "boundary", "degree " + std::to_string(degree) + ", k = " + std::to_string(k), degree});
    }
    return out;
}

Classification classify(const PolarSymbol& f, const PolarSymbol& g, int lo, int hi, int max_power) {
    const GradedOperator tf = from_symbol(f).window(lo, hi);
    const GradedOperator tg = from_symbol(g);
    std::vector<GradedOperator> powers;
    for (int j = 0; j <= max_power; ++j)
        powers.push_back((j == 0 ? GradedOperator::identity() : power(tg, j)).window(lo, hi));
    const std::size_t nc = powers.size();

    Matrix m;
    const long samples = 16;
    for (int d = lo; d <= hi; ++d) {
        const long k0 = std::max(0, -d);
        for (long k = k0; k < k0 + samples; ++k) {
            Row r(nc + 1);
            for (std::size_t j = 0; j < nc; ++j) {
                auto a = apply(powers[j], k);
                auto it = a.find(d);
                if (it != a.end()) r[j] = it->second;
            }
            auto a = apply(tf, k);
            auto it = a.find(d);
            if (it != a.end()) r[nc] = -it->second;
            if (!all_zero(r)) m.push_back(std::move(r));
        }
    }
    Classification out;
    out.coefficients.assign(nc, GaussianRational());
    std::vector<std::size_t> pivots = rref(m, nc + 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == nc) {
            out.text = "not a polynomial in Tg";
            return out;
        }
        out.coefficients[pivots[r]] = -m[r][nc];
    }
    GradedOperator sum;
    for (std::size_t j = 0; j < nc; ++j) sum += out.coefficients[j] * powers[j];
    if (!equals(sum, tf)) {
        out.coefficients.assign(nc, GaussianRational());
        out.text = "not a polynomial in Tg";
        return out;
    }
    out.polynomial = true;
    std::vector<std::pair<GaussianRational, std::string>> terms;
    for (std::size_t j = nc; j-- > 0;) terms.emplace_back(out.coefficients[j], power_text(j));
    out.text = linear_text(terms);
    return out;
}

namespace {

struct PassState {
    SolvePass pass;
    ParametricOperator f;
};

void log_entry(std::vector<std::string>& trace, int top, const ConstraintLedger& ledger, const LedgerEntry& e) {
    trace.push_back("N=" + std::to_string(top) + " degree " + std::to_string(e.degree) + " " + e.rule + " [" +
                    e.detail + "]: " + (e.rule == "derived" ? e.detail : ledger.format(e.coefficients)));
}

/// Adds an entry, logs it and any parameters it forces to zero. Returns
/// true when the top coefficient became zero.
bool push(PassState& st, std::vector<std::string>& trace, LedgerEntry e) {
    ConstraintLedger& ledger = st.pass.ledger;
    if (!ledger.add(std::move(e))) return false;
    log_entry(trace, st.pass.top, ledger, ledger.entries.back());
    bool top_zero = false;
    std::vector<std::size_t> forced = ledger.record_forced(ledger.entries.back().degree);
    const std::size_t first = ledger.entries.size() - forced.size();
    for (std::size_t j = 0; j < forced.size(); ++j) {
        log_entry(trace, st.pass.top, ledger, ledger.entries[first + j]);
        if (forced[j] == 0) top_zero = true;
    }
    return top_zero;
}

SolvePass run_pass(const CommutantProblem& problem, int top, std::vector<std::string>& trace) {
    PassState st;
    st.pass.top = top;
    trace.push_back("pass N=" + std::to_string(top) + ", L=" + std::to_string(problem.depth));
    CommutantProblem local = problem;
    local.top = top;

    for (int d = top + 1; d >= -problem.depth + 1; --d) {
        const int p = d - 1;
        DegreeEquation eq = degree_equation(local, d, st.f);
        ParametricSolution sol = solve_parametric(eq.a, eq.b, eq.rhs, kStep);

        for (const auto& row : sol.compatibility)
            if (push(st, trace, {row, "compatibility", "tail identity at degree " + std::to_string(d), d})) {
                st.pass.eliminated = true;
                break;
            }
        if (st.pass.eliminated) break;

        DegreeFamily fam;
        fam.degree = p;
        std::vector<RationalFunction> y = sol.particular;
        const bool fresh = !sol.homogeneous.empty();
        if (fresh) {
            RationalFunction yh = sol.homogeneous[0];
            RationalFunction closed = RationalFunction(Polynomial::linear(4)) /
                                      RationalFunction(Polynomial::linear(GaussianRational(2 * p + 4)));
            if ((yh / closed).is_constant()) yh = closed;
            fam.parameter = parameter_name(top, p);
            st.pass.ledger.add_parameter(fam.parameter);
            st.f.names.push_back(fam.parameter);
            st.f.columns.emplace_back();
            y.push_back(yh);
        }
        const long start = std::max(0, -p);
        auto with_part = [&](const std::vector<RationalFunction>& ys) {
            ParametricOperator g = st.f;
            for (std::size_t i = 0; i < ys.size(); ++i)
                if (!ys[i].is_zero()) g.columns[i] += GradedOperator({{p, PiecewiseWeight::from(start, ys[i])}});
            return g;
        };

        ParametricOperator trial = with_part(y);
        std::vector<LedgerEntry> boundary = boundary_constraints(local, d, trial);
        if (fresh) {
            // Choose the particular solutions that satisfy the first boundary
            // equation in which the new parameter appears.
            const std::size_t h = y.size() - 1;
            for (const auto& e : boundary) {
                const GaussianRational beta = e.coefficients[h];
                if (beta.is_zero()) continue;
                for (std::size_t i = 0; i < h; ++i) {
                    const GaussianRational lambda = e.coefficients[i] / beta;
                    if (!lambda.is_zero()) y[i] -= RationalFunction(lambda) * y[h];
                }
                trial = with_part(y);
                boundary = boundary_constraints(local, d, trial);
                break;
            }
        }
        st.f = trial;
        fam.weights = y;
        for (const auto& w : y) fam.mellin.push_back(weight_to_mellin(p, w));
        st.pass.families.push_back(fam);

        std::vector<LedgerEntry> entries = admissibility_constraints(fam);
        entries.insert(entries.end(), boundary.begin(), boundary.end());
        for (auto& e : entries) {
            e.degree = d;
            if (push(st, trace, std::move(e))) {
                st.pass.eliminated = true;
                break;
            }
        }
        if (st.pass.eliminated) break;
    }
    if (st.pass.eliminated) {
        st.pass.outcome = st.pass.ledger.parameters[0] + " forced to zero";
        trace.push_back("N=" + std::to_string(top) + ": " + st.pass.outcome + "; top degree is at most " +
                        std::to_string(top - 1));
    } else {
        st.pass.outcome = "completed";
        trace.push_back("N=" + std::to_string(top) + ": completed");
    }
    return st.pass;
}

}  // namespace

SolveReport solve_ladder(const CommutantProblem& problem) {
    problem.validate();
    SolveReport rep;
    rep.problem = problem;
    auto a = [&](std::size_t l) { return l <= problem.g_tail.size() ? problem.g_tail[l - 1] : GaussianRational(); };
    bool high = false;
    for (std::size_t l = 5; l <= problem.g_tail.size(); ++l)
        if (!a(l).is_zero()) high = true;
    if (!high) rep.hypotheses.push_back("a_l = 0 for every l >= 5");
    for (std::size_t l = 1; l <= 5; ++l)
        if (a(l).is_zero()) rep.hypotheses.push_back("a_" + std::to_string(l) + " = 0");

    for (int top = problem.top; top >= 1; --top) {
        rep.passes.push_back(run_pass(problem, top, rep.trace));
        if (!rep.passes.back().eliminated) break;
    }

    const SolvePass& last = rep.passes.back();
    rep.solution_space = last.ledger.solution_space();
    const PolarSymbol g = problem.g();
    const GradedOperator tg = from_symbol(g);
    rep.verified = true;
    for (const Row& v : rep.solution_space) {
        PolarSymbol s;
        for (const auto& fam : last.families) {
            RationalFunction m;
            for (std::size_t i = 0; i < fam.mellin.size() && i < v.size(); ++i)
                if (!v[i].is_zero()) m += RationalFunction(v[i]) * fam.mellin[i];
            if (!m.is_zero()) s += PolarSymbol({{fam.degree, inverse_mellin(m)}});
        }
        rep.basis.push_back(s);
        const GradedOperator tf = from_symbol(s);
        for (int d = -problem.depth + 1; d <= last.top + 1; ++d)
            if (!commutator_component(tf, tg, d).is_zero()) rep.verified = false;
        rep.classification.push_back(classify(s, g, -problem.depth, last.top, last.top));
    }

    // Name the span of the classified basis when it is spanned by powers of T_g.
    const std::size_t nc = static_cast<std::size_t>(last.top) + 1;
    bool all_poly = std::all_of(rep.classification.begin(), rep.classification.end(),
                                [](const Classification& c) { return c.polynomial; });
    if (all_poly) {
        Matrix m;
        std::vector<bool> used(nc, false);
        for (const auto& c : rep.classification) {
            m.push_back(c.coefficients);
            for (std::size_t j = 0; j < nc; ++j)
                if (!c.coefficients[j].is_zero()) used[j] = true;
        }
        const std::size_t support = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
        if (rank(m, nc) == support) {
            std::string text;
            for (std::size_t j = nc; j-- > 0;) {
                if (!used[j]) continue;
                std::string t = "C" + std::to_string(j) + "*" + power_text(j);
                text += text.empty() ? t : " + " + t;
            }
            rep.classification_text = text.empty() ? "0" : text;
        } else {
            rep.classification_text = "polynomials in Tg (see basis)";
        }
    } else {
        rep.classification_text = "not a polynomial in Tg";
    }
    return rep;
}

}  // namespace qtoeplitz
