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

#include "qtoeplitz/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qtoeplitz/quadrature.hpp"

namespace qtoeplitz {

using Tree = Report::Tree;

namespace {

Tree symbol_json(const SymbolDocument& d) {
    Tree t;
    t["source"] = d.source;
    t["canonical"] = print_symbol(d.symbol);
    t["window"] = {d.window.first, d.window.second};
    if (!d.warnings.empty()) t["warnings"] = d.warnings;
    return t;
}

std::string term_text(const RadialTerm& t) { return RadialSymbol({t}).str(); }

Tree operator_json(const GradedOperator& op) {
    Tree parts = Tree::array();
    for (const auto& [d, w] : op.parts()) parts.push_back({{"degree", d}, {"weight", w.str()}});
    return parts;
}

Tree recovery_json(const ToeplitzRecovery& r) {
    Tree t;
    t["toeplitz"] = r.ok;
    if (r.ok) {
        t["symbol"] = print_symbol(r.symbol);
    } else {
        t["degree"] = r.degree;
        if (r.index) t["index"] = *r.index;
        Tree w = Tree::array();
        for (const auto& term : r.witness) w.push_back(term_text(term));
        t["witness"] = w;
        t["message"] = r.message;
    }
    return t;
}

Tree inputs_json(std::initializer_list<const SymbolDocument*> docs) {
    Tree s = Tree::array();
    for (const auto* d : docs) s.push_back(symbol_json(*d));
    return s;
}

// Smallest k >= max(0,-p) at which the Mellin integral of phi at 2k+p+2 converges.
long first_convergent_index(int p, const RadialSymbol& phi) {
    Rational worst = 0;
    bool any = false;
    for (const auto& t : phi.terms())
        if (!any || t.exponent < worst) worst = t.exponent, any = true;
    long k = std::max(0, -p);
    while (Rational(2 * k + p + 2) + worst <= 0) ++k;
    return k;
}

}  // namespace

CommutantProblem commutant_problem(const PolarSymbol& g, int top, int depth) {
    const char* shape = "g must have the form e(1)*r^3 + sum_l a_l*zbar^l";
    const RadialSymbol* lead = g.component(1);
    if (lead == nullptr || *lead != RadialSymbol::monomial(1, Rational(3))) throw std::invalid_argument(shape);
    std::vector<GaussianRational> tail;
    for (const auto& [d, phi] : g.components()) {
        if (d == 1) continue;
        if (d >= 0 || phi.terms().size() != 1 || phi.terms()[0].exponent != -d || phi.terms()[0].log_power != 0)
            throw std::invalid_argument(shape);
        const auto l = static_cast<std::size_t>(-d);
        if (tail.size() < l) tail.resize(l);
        tail[l - 1] = phi.terms()[0].coefficient;
    }
    if (top >= 1 && depth >= 0 && static_cast<int>(tail.size()) < top + depth)
        tail.resize(static_cast<std::size_t>(top + depth));
    CommutantProblem p{tail, top, depth};
    p.validate();
    return p;
}

Report mellin_report(const std::vector<SymbolDocument>& docs, std::optional<double> at) {
    Report rep("mellin");
    rep.inputs()["symbols"] = Tree::array();
    for (const auto& d : docs) rep.inputs()["symbols"].push_back(symbol_json(d));
    if (at) rep.inputs()["at"] = *at;
    Tree out = Tree::array();
    double worst = 0;
    for (const auto& doc : docs) {
        Tree s;
        s["symbol"] = print_symbol(doc.symbol);
        Tree degs = Tree::array();
        for (const auto& [p, phi] : doc.symbol.components()) {
            const RationalFunction m = mellin(phi);
            const Admissibility adm = is_admissible(phi);
            Tree e;
            e["degree"] = p;
            e["radial"] = phi.str();
            e["mellin"] = m.str("z");
            e["admissible"] = adm.admissible;
            if (!adm.admissible) {
                Tree w = Tree::array();
                for (const auto& t : adm.witness) w.push_back(term_text(t));
                e["witness"] = w;
            }
            if (at) {
                const GaussianRational z{Rational(*at)};
                Tree v;
                try {
                    const GaussianRational exact = m(z);
                    const std::complex<double> num = numeric_mellin(phi, *at).value;
                    v["exact"] = exact.str();
                    v["quadrature"] = {num.real(), num.imag()};
                    const double err = std::abs(num - exact.to_complex());
                    v["abs_error"] = err;
                    worst = std::max(worst, err);
                } catch (const PoleError&) {
                    v["exact"] = nullptr;
                    v["message"] = "z is a pole of the transform";
                }
                e["value"] = v;
            }
            degs.push_back(e);
        }
        s["degrees"] = degs;
        out.push_back(s);
    }
    rep.results()["transforms"] = out;
    if (at) rep.results()["max_abs_error"] = worst;
    return rep;
}

Report apply_report(const SymbolDocument& doc, long k) {
    if (k < 0) throw std::invalid_argument("apply: k must be nonnegative");
    Report rep("apply");
    rep.inputs()["symbols"] = inputs_json({&doc});
    rep.inputs()["k"] = k;
    const auto image = apply(from_symbol(doc.symbol), k);
    Tree img = Tree::object();
    std::string summary;
    for (const auto& [p, c] : image) {
        img[std::to_string(p)] = c.str();
        summary += (summary.empty() ? "" : ", ") + std::string("degree ") + std::to_string(p) + ": " + c.str();
    }
    rep.results()["image"] = img;
    rep.results()["summary"] = "{" + summary + "}";
    return rep;
}

namespace {

Report operator_report(const std::string& command, const GradedOperator& op) {
    Report rep(command);
    rep.results()["operator"] = operator_json(op);
    rep.results()["recovery"] = recovery_json(toeplitz_symbol_of(op));
    return rep;
}

}  // namespace

Report compose_report(const SymbolDocument& s, const SymbolDocument& t) {
    Report rep = operator_report("compose", compose(from_symbol(s.symbol), from_symbol(t.symbol)));
    rep.inputs()["symbols"] = inputs_json({&s, &t});
    return rep;
}

Report commutator_report(const SymbolDocument& a, const SymbolDocument& b) {
    const GradedOperator c = commutator(from_symbol(a.symbol), from_symbol(b.symbol));
    Report rep = operator_report("commutator", c);
    rep.inputs()["symbols"] = inputs_json({&a, &b});
    rep.results()["zero"] = c.is_zero();
    return rep;
}

Report power_report(const SymbolDocument& doc, int n) {
    if (n < 0) throw std::invalid_argument("power: n must be nonnegative");
    Report rep = operator_report("power", power(from_symbol(doc.symbol), n));
    rep.inputs()["symbols"] = inputs_json({&doc});
    rep.inputs()["n"] = n;
    return rep;
}

Report square_check_report(const SymbolDocument& g) {
    Report rep("square-check");
    rep.inputs()["symbols"] = inputs_json({&g});
    const SquareCheck sc = square_check(g.symbol);
    rep.results()["m"] = sc.m;
    rep.results()["recovery"] = recovery_json(sc.recovery);
    rep.results()["summary"] = sc.recovery.ok ? "T_g^2 is Toeplitz" : "T_g^2 is not Toeplitz";
    if (!sc.recovery.ok) rep.set_status("refuted");
    return rep;
}

Report solve_report(const SymbolDocument& g, int top, int depth) {
    const CommutantProblem problem = commutant_problem(g.symbol, top, depth);
    const SolveReport sr = solve_ladder(problem);
    Report rep("solve-commutant");
    rep.inputs()["symbols"] = inputs_json({&g});
    rep.inputs()["max_degree"] = top;
    rep.inputs()["depth"] = depth;

    Tree& r = rep.results();
    Tree tail = Tree::array();
    for (const auto& a : problem.g_tail) tail.push_back(a.str());
    r["g_tail"] = tail;
    r["hypotheses_failed"] = sr.hypotheses;
    Tree passes = Tree::array();
    for (const auto& pass : sr.passes) {
        Tree p;
        p["top"] = pass.top;
        p["eliminated"] = pass.eliminated;
        p["outcome"] = pass.outcome;
        p["parameters"] = pass.ledger.parameters;
        Tree ledger = Tree::array();
        for (const auto& e : pass.ledger.entries)
            ledger.push_back({{"degree", e.degree},
                              {"rule", e.rule},
                              {"detail", e.detail},
                              {"equation", pass.ledger.format(e.coefficients) + " = 0"}});
        p["ledger"] = ledger;
        Tree fams = Tree::array();
        for (const auto& fam : pass.families) {
            Tree f;
            f["degree"] = fam.degree;
            f["parameter"] = fam.parameter;
            Tree cols = Tree::object();
            for (std::size_t i = 0; i < fam.mellin.size(); ++i)
                if (!fam.mellin[i].is_zero()) cols[pass.ledger.parameters.at(i)] = fam.mellin[i].str("z");
            f["mellin"] = cols;
            fams.push_back(f);
        }
        p["families"] = fams;
        passes.push_back(p);
    }
    r["passes"] = passes;
    r["solution_dimension"] = sr.solution_space.size();
    Tree basis = Tree::array();
    for (std::size_t i = 0; i < sr.basis.size(); ++i)
        basis.push_back({{"symbol", print_symbol(sr.basis[i])}, {"classification", sr.classification[i].text}});
    r["basis"] = basis;
    r["classification"] = sr.classification_text;
    r["verified_window"] = {-depth + 1, sr.final_pass().top + 1};
    r["verified"] = sr.verified;
    rep.tree()["trace"] = sr.trace;
    if (!sr.verified) rep.set_status("refuted");
    return rep;
}

Report verify(const SymbolDocument& g, const SymbolDocument& f, const VerifyOptions& opt) {
    if (opt.dim < 1) throw std::invalid_argument("verify: dim must be at least 1");
    Report rep("verify");
    rep.inputs()["symbols"] = inputs_json({&g, &f});
    rep.inputs()["dim"] = opt.dim;
    rep.inputs()["tol"] = opt.tol;
    if (opt.window) rep.inputs()["window"] = {opt.window->first, opt.window->second};
    else rep.inputs()["window"] = nullptr;
    rep.inputs()["samples"] = opt.samples;
    rep.inputs()["seed"] = opt.seed;

    int spread = 0;
    for (const PolarSymbol* s : {&g.symbol, &f.symbol})
        if (!s->is_zero()) spread = std::max({spread, std::abs(s->min_degree()), std::abs(s->max_degree())});
    const long safe = opt.dim - 2L * spread;
    if (safe < 0) throw std::invalid_argument("verify: dim too small for any truncation-safe column");

    const auto A = to_matrix(from_symbol(f.symbol), opt.dim);
    const auto B = to_matrix(from_symbol(g.symbol), opt.dim);
    const auto n = static_cast<std::size_t>(opt.dim + 1);
    double max_abs = 0;
    GaussianRational max_entry;
    long arg_row = -1, arg_col = -1, nonzero = 0;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(safe); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const long deg = static_cast<long>(i) - static_cast<long>(j);
            if (opt.window && (deg < opt.window->first || deg > opt.window->second)) continue;
            GaussianRational c;
            for (std::size_t l = 0; l < n; ++l) {
                if (!A[i][l].is_zero() && !B[l][j].is_zero()) c += A[i][l] * B[l][j];
                if (!B[i][l].is_zero() && !A[l][j].is_zero()) c -= B[i][l] * A[l][j];
            }
            if (c.is_zero()) continue;
            ++nonzero;
            if (c.abs() > max_abs || arg_row < 0) {
                max_abs = c.abs();
                max_entry = c;
                arg_row = static_cast<long>(i);
                arg_col = static_cast<long>(j);
            }
        }
    }
    Tree& r = rep.results();
    r["safe_columns"] = {0, safe};
    r["exact_zero"] = nonzero == 0;
    r["nonzero_entries"] = nonzero;
    r["max_abs_entry"] = max_abs;
    r["max_entry"] = max_entry.str();
    if (nonzero > 0) r["max_entry_position"] = {{"row", arg_row}, {"column", arg_col}};

    // Weight cross-checks against numeric Mellin quadrature.
    std::mt19937 rng(opt.seed);
    std::vector<std::pair<int, const RadialSymbol*>> comps;
    for (const PolarSymbol* s : {&g.symbol, &f.symbol})
        for (const auto& [p, phi] : s->components()) comps.emplace_back(p, &phi);
    Tree checks = Tree::array();
    double worst = 0;
    bool quad_ok = true;
    for (int t = 0; t < opt.samples && !comps.empty(); ++t) {
        const auto& [p, phi] = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
        const long k0 = first_convergent_index(p, *phi);
        const long k = std::uniform_int_distribution<long>(k0, std::max(k0, opt.dim))(rng);
        Tree c{{"degree", p}, {"k", k}};
        try {
            const GaussianRational exact = toeplitz_weight(p, *phi)(k);
            const std::complex<double> num =
                static_cast<double>(2 * k + 2 * p + 2) * numeric_mellin(*phi, static_cast<double>(2 * k + p + 2)).value;
            const double err = std::abs(num - exact.to_complex()) / std::max(1.0, exact.abs());
            c["exact"] = exact.str();
            c["quadrature"] = {num.real(), num.imag()};
            c["error"] = err;
            worst = std::max(worst, err);
            if (!(err <= opt.tol)) quad_ok = false;
        } catch (const PoleError&) {
            c["exact"] = nullptr;
        }
        checks.push_back(c);
    }
    r["quadrature"] = {{"checks", checks}, {"max_error", worst}, {"passed", quad_ok}};
    r["summary"] = nonzero == 0 ? "commutator is exactly zero on safe columns"
                                : "commutator has " + std::to_string(nonzero) + " nonzero entries on safe columns";
    if (nonzero > 0 || !quad_ok) rep.set_status("refuted");
    return rep;
}

namespace {

std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<SymbolDocument> load(const std::vector<std::string>& paths, const std::vector<std::string>& exprs,
                                 std::istream& in) {
    std::vector<SymbolDocument> docs;
    auto add = [&](const std::string& text) {
        for (auto& d : parse_documents(text)) docs.push_back(std::move(d));
    };
    for (const auto& path : paths) {
        if (path == "-") {
            add(slurp(in));
            continue;
        }
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot read " + path);
        add(slurp(file));
    }
    for (const auto& e : exprs) docs.push_back(parse_symbol(e));
    if (paths.empty() && exprs.empty()) add(slurp(in));
    return docs;
}

void need(const std::vector<SymbolDocument>& docs, std::size_t n, const std::string& command) {
    if (docs.size() < n)
        throw std::invalid_argument(command + " needs " + std::to_string(n) + " symbol(s), got " +
                                    std::to_string(docs.size()));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus for quasihomogeneous Toeplitz operators on the Bergman space", "qtoeplitz"};
    app.require_subcommand(1);
    bool json = false;
    bool timings = false;
    std::vector<std::string> paths;
    std::vector<std::string> exprs;
    long k = 0;
    int n = 2;
    int top = 4;
    int depth = 8;
    double at = 0;
    VerifyOptions vopt;
    std::vector<int> window;

    auto common = [&](CLI::App* sub) {
        sub->add_option("inputs", paths, "symbol files, '-' for stdin");
        sub->add_option("-e,--expr", exprs, "symbol given inline");
        sub->add_flag("--json", json, "print the report as JSON");
        sub->add_flag("--timings", timings, "add wall-clock timings to the report");
        return sub;
    };
    auto* c_mellin = common(app.add_subcommand("mellin", "Mellin transform and admissibility per degree"));
    auto* o_at = c_mellin->add_option("--at", at, "also evaluate at this z, exactly and by quadrature");
    auto* c_apply = common(app.add_subcommand("apply", "T_f(z^k)"));
    c_apply->add_option("--k", k, "basis index")->required();
    auto* c_compose = common(app.add_subcommand("compose", "T_f T_g"));
    auto* c_comm = common(app.add_subcommand("commutator", "[T_f, T_g]"));
    auto* c_power = common(app.add_subcommand("power", "T_f^n"));
    c_power->add_option("--n", n, "exponent")->required();
    auto* c_square = common(app.add_subcommand("square-check", "is T_g^2 Toeplitz"));
    auto* c_solve = common(app.add_subcommand("solve-commutant", "solve [T_f, T_g] = 0 on a degree window"));
    c_solve->add_option("--max-degree", top, "top degree N of the ansatz")->required();
    c_solve->add_option("--depth", depth, "lowest degree -L of the ansatz")->required();
    auto* c_verify = common(app.add_subcommand("verify", "matrix and quadrature check of [T_f, T_g] = 0 (inputs g, f)"));
    c_verify->add_option("--dim", vopt.dim, "truncation K")->required();
    c_verify->add_option("--tol", vopt.tol, "quadrature tolerance")->required();
    c_verify->add_option("--window", window, "commutator degrees lo hi")->expected(2);
    c_verify->add_option("--samples", vopt.samples, "number of quadrature checks");
    c_verify->add_option("--seed", vopt.seed, "seed for the quadrature sample");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
        const auto docs = load(paths, exprs, in);
        for (const auto& d : docs)
            for (const auto& w : d.warnings) err << "warning: " << w << "\n";
        if (c_mellin->parsed()) {
            rep = mellin_report(docs, o_at->count() ? std::optional<double>(at) : std::nullopt);
        } else if (c_apply->parsed()) {
            need(docs, 1, "apply");
            rep = apply_report(docs[0], k);
        } else if (c_compose->parsed()) {
            need(docs, 2, "compose");
            rep = compose_report(docs[0], docs[1]);
        } else if (c_comm->parsed()) {
            need(docs, 2, "commutator");
            rep = commutator_report(docs[0], docs[1]);
        } else if (c_power->parsed()) {
            need(docs, 1, "power");
            rep = power_report(docs[0], n);
        } else if (c_square->parsed()) {
            need(docs, 1, "square-check");
            rep = square_check_report(docs[0]);
        } else if (c_solve->parsed()) {
            need(docs, 1, "solve-commutant");
            rep = solve_report(docs[0], top, depth);
        } else if (c_verify->parsed()) {
            need(docs, 2, "verify");
            if (window.size() == 2) vopt.window = std::make_pair(window[0], window[1]);
            rep = verify(docs[0], docs[1], vopt);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (json) {
            Report fail(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
            fail.set_status("error");
            fail.tree()["error"] = e.what();
            out << fail.serialize();
        }
        return kExitError;
    }
    if (timings) {
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rep.tree()["timings"] = {{"total_ms", ms}};
    }
    out << (json ? rep.serialize() : rep.render());
    return rep.status() == "ok" ? kExitOk : kExitRefuted;
}

}  // namespace qtoeplitz
