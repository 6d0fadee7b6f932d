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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtoeplitz/commutant_solver.hpp"
#include "qtoeplitz/report.hpp"
#include "qtoeplitz/symbol_text.hpp"

namespace qtoeplitz {

enum ExitCode : int { kExitOk = 0, kExitRefuted = 1, kExitError = 2 };

/// Reads g = e(1)*r^3 + sum_l a_l zbar^l into a solver problem with a_l
/// padded by zeros up to top + depth. Throws std::invalid_argument otherwise.
CommutantProblem commutant_problem(const PolarSymbol& g, int top, int depth);

struct VerifyOptions {
    long dim = 60;
    double tol = 1e-10;
    std::optional<std::pair<int, int>> window;  // commutator degrees to inspect
    int samples = 20;
    unsigned seed = 20260101;
};

/// Exact commutator of truncated matrices on safe columns plus numeric
/// quadrature checks of the weights. Status "refuted" on a nonzero entry or
/// a quadrature miss.
Report verify(const SymbolDocument& g, const SymbolDocument& f, const VerifyOptions& opt);

Report mellin_report(const std::vector<SymbolDocument>& docs, std::optional<double> at);
Report apply_report(const SymbolDocument& doc, long k);
Report compose_report(const SymbolDocument& s, const SymbolDocument& t);
Report commutator_report(const SymbolDocument& a, const SymbolDocument& b);
Report power_report(const SymbolDocument& doc, int n);
Report square_check_report(const SymbolDocument& g);
Report solve_report(const SymbolDocument& g, int top, int depth);

/// Full command line without the program name. Writes the rendered or JSON
/// report to out and diagnostics to err; returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qtoeplitz
