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

#include <string>
#include <vector>

#include "qtoeplitz/difference_solver.hpp"
#include "qtoeplitz/graded_operator.hpp"
#include "qtoeplitz/linear_system.hpp"

namespace qtoeplitz {

/// g = e^{i theta} r^3 + sum_l a_l zbar^l and an ansatz f supported on
/// degrees [-depth, top].
struct CommutantProblem {
    std::vector<GaussianRational> g_tail;  // a_1, a_2, ...
    int top = 1;
    int depth = 0;

    PolarSymbol g() const;
    /// Throws std::invalid_argument when the data cannot support the window.
    void validate() const;
};

/// f = sum_i c_i columns[i] over named scalar parameters c_i.
struct ParametricOperator {
    std::vector<std::string> names;
    std::vector<GradedOperator> columns;

    std::size_t size() const { return columns.size(); }
    GradedOperator member(const Row& c) const;
};

/// Tail identity of the degree-d component of [T_f, T_g] = 0, as a
/// difference equation (step 2 in u = 2k) for the weight Y of degree d-1:
///   a(u) Y(u+2) + b(u) Y(u) = sum_i c_i rhs[i](u).
struct DegreeEquation {
    int degree = 0;
    int unknown = 0;
    RationalFunction a;
    RationalFunction b;
    std::vector<RationalFunction> rhs;

    DifferenceEquation combined(const Row& c) const;
};

DegreeEquation degree_equation(const CommutantProblem& problem, int degree, const ParametricOperator& upstream);

/// Mellin transform of the radial part whose degree-p weight is y.
RationalFunction weight_to_mellin(int p, const RationalFunction& y);
RationalFunction mellin_to_weight(int p, const RationalFunction& f);

struct LedgerEntry {
    Row coefficients;   // over the ledger parameters known when it was added
    std::string rule;   // compatibility, admissibility, boundary, derived
    std::string detail;
    int degree = 0;
};

class ConstraintLedger {
public:
    std::vector<std::string> parameters;
    std::vector<LedgerEntry> entries;

    std::size_t add_parameter(const std::string& name);
    /// Appends a raw equation; all-zero rows are ignored. Returns true when
    /// the entry was kept.
    bool add(LedgerEntry e);
    /// Records "name = 0" for every parameter newly forced to zero and
    /// returns their indices.
    std::vector<std::size_t> record_forced(int degree);
    bool forces_zero(std::size_t parameter) const;
    /// Basis of the parameter vectors satisfying every entry.
    std::vector<Row> solution_space() const;
    Matrix rows() const;
    std::string format(const Row& coefficients) const;

private:
    std::vector<bool> known_zero_;
};

/// Per-column Mellin transforms of a solved degree.
struct DegreeFamily {
    int degree = 0;  // radial degree p of f_p
    std::string parameter;  // homogeneous parameter introduced here (may be empty)
    std::vector<RationalFunction> weights;  // per column, in u
    std::vector<RationalFunction> mellin;   // per column
};

/// Ledger rows (coefficients, detail) forcing admissibility of f_p.
std::vector<LedgerEntry> admissibility_constraints(const DegreeFamily& family);

/// Scalar equations from the indices of the degree-d component of [T_f, T_g]
/// below its tail.
std::vector<LedgerEntry> boundary_constraints(const CommutantProblem& problem, int degree, const ParametricOperator& f);

struct Classification {
    bool polynomial = false;
    Row coefficients;  // c_j of T_g^j
    std::string text;
};

/// Expresses T_f as sum_j c_j T_g^j on the degrees [lo, hi], trying j <= max_power.
Classification classify(const PolarSymbol& f, const PolarSymbol& g, int lo, int hi, int max_power);

struct SolvePass {
    int top = 0;
    ConstraintLedger ledger;
    std::vector<DegreeFamily> families;
    bool eliminated = false;
    std::string outcome;
};

struct SolveReport {
    CommutantProblem problem;
    std::vector<SolvePass> passes;
    std::vector<std::string> trace;
    std::vector<std::string> hypotheses;  // classical hypotheses on a_l that fail
    /// Final pass data.
    std::vector<Row> solution_space;
    std::vector<PolarSymbol> basis;
    std::vector<Classification> classification;
    std::string classification_text;
    bool verified = false;  // commutator vanishes on degrees [-depth+1, top+1]

    const SolvePass& final_pass() const { return passes.back(); }
};

SolveReport solve_ladder(const CommutantProblem& problem);

}  // namespace qtoeplitz
