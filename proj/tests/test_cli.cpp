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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qtoeplitz/cli.hpp"

using namespace qtoeplitz;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Report::Tree json_of(const Run& r) { return Report::deserialize(r.out).tree(); }

// e(1)*r^3 + sum_{l<=n} a_l zbar^l with a_l = 1/l!
std::string factorial_g(int n) {
    std::string g = "e(1)*r^3";
    long f = 1;
    for (int l = 1; l <= n; ++l) {
        f *= l;
        g += " + 1/" + std::to_string(f) + "*zbar^" + std::to_string(l);
    }
    return g;
}

const char* kG5 = "e(1)*r^3 + zbar + zbar^2 + zbar^3 + zbar^4 + zbar^5";

}  // namespace

TEST_CASE("cli apply prints the image of z^k") {
    Run r = run({"apply", "--k", "0", "-e", "e(1)*r^3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("summary: {degree 1: 2/3}") != std::string::npos);
    Report::Tree t = json_of(run({"apply", "--k", "3", "--json", "-e", "z + 2"}));
    CHECK(t["results"]["summary"] == "{degree 0: 2, degree 1: 1}");
}

TEST_CASE("cli square-check refutes m = 5 and accepts m = 4") {
    Run bad = run({"square-check", "--json", "-e", kG5});
    CHECK(bad.code == kExitRefuted);
    Report::Tree t = json_of(bad);
    CHECK(t["status"] == "refuted");
    CHECK(t["results"]["m"] == 5);
    CHECK(t["results"]["recovery"]["toeplitz"] == false);
    Run ok = run({"square-check", "-e", "e(1)*r^3 + zbar + zbar^2 + zbar^3 + zbar^4"});
    CHECK(ok.code == kExitOk);
}

TEST_CASE("cli solve-commutant on a_l = 1/l!") {
    Run r = run({"solve-commutant", "--max-degree", "4", "--depth", "8", "--json", "-e", factorial_g(12)});
    CHECK(r.code == kExitOk);
    Report::Tree t = json_of(r);
    CHECK(t["results"]["classification"] == "C1*Tg + C0*I");
    CHECK(t["results"]["solution_dimension"] == 2);
    CHECK(t["results"]["verified"] == true);
    CHECK(t["results"]["passes"].size() == 4);
    CHECK(t["trace"].size() > 10);
    // a_l beyond the given terms are padded with zeros.
    Run shortg = run({"solve-commutant", "--max-degree", "2", "--depth", "3", "--json", "-e", "e(1)*r^3 + zbar"});
    CHECK(json_of(shortg)["results"]["g_tail"].size() == 5);
}

TEST_CASE("cli solve-commutant rejects other shapes") {
    Run r = run({"solve-commutant", "--max-degree", "2", "--depth", "2", "-e", "e(1)*r^2 + zbar"});
    CHECK(r.code == kExitError);
    CHECK(r.err.find("form") != std::string::npos);
}

TEST_CASE("cli verify: polynomial in g commutes exactly") {
    const std::string g = factorial_g(6);
    const std::string f = "2*e(1)*r^3 + 2*zbar + 1*zbar^2 + 1/3*zbar^3 + 1/12*zbar^4 + 1/60*zbar^5 + 1/360*zbar^6 + 3";
    Run r = run({"verify", "--dim", "60", "--tol", "1e-10", "--json", "-e", g, "-e", f});
    CHECK(r.code == kExitOk);
    Report::Tree t = json_of(r);
    CHECK(t["results"]["exact_zero"] == true);
    CHECK(t["results"]["max_entry"] == "0");
    CHECK(t["results"]["safe_columns"][1] == 48);
    CHECK(t["results"]["quadrature"]["passed"] == true);
    CHECK(t["results"]["quadrature"]["checks"].size() == 20);
}

TEST_CASE("cli verify: a perturbation shows up") {
    const std::string g = factorial_g(4);
    Run r = run({"verify", "--dim", "30", "--tol", "1e-10", "--json", "-e", g, "-e", g + " + zbar"});
    CHECK(r.code == kExitRefuted);
    Report::Tree t = json_of(r);
    CHECK(t["results"]["exact_zero"] == false);
    CHECK(t["results"]["max_abs_entry"].get<double>() > 0);
    // [T_zbar, T_g] has no component below degree -5; the window excludes it all.
    Run w = run({"verify", "--dim", "30", "--tol", "1e-10", "--window", "-40", "-6", "-e", g, "-e", g + " + zbar"});
    CHECK(w.code == kExitOk);
}

TEST_CASE("cli mellin cross-checks quadrature") {
    Run r = run({"mellin", "--at", "6", "--json", "-e", "r^3"});
    CHECK(r.code == kExitOk);
    Report::Tree t = json_of(r);
    Report::Tree v = t["results"]["transforms"][0]["degrees"][0]["value"];
    CHECK(v["exact"] == "1/9");
    CHECK(v["abs_error"].get<double>() < 1e-10);
    Report::Tree bad = json_of(run({"mellin", "--json", "-e", "1*e(0)*r^-2"}));
    CHECK(bad["results"]["transforms"][0]["degrees"][0]["admissible"] == false);
}

TEST_CASE("cli compose, commutator and power") {
    Report::Tree c = json_of(run({"compose", "--json", "-e", "zbar", "-e", "e(1)*r^3"}));
    CHECK(c["results"]["recovery"]["toeplitz"] == true);
    CHECK(c["results"]["recovery"]["symbol"] == "e(0)*r^4");
    Report::Tree k = json_of(run({"commutator", "--json", "-e", "z", "-e", "z^2"}));
    CHECK(k["results"]["zero"] == true);
    Run p = run({"power", "--n", "3", "--json", "-e", "e(1)*r^3"});
    CHECK(p.code == kExitOk);
    Report::Tree pt = json_of(p);
    REQUIRE(pt["results"]["operator"].size() == 1);
    CHECK(pt["results"]["operator"][0]["degree"] == 3);
}

TEST_CASE("cli reads symbols from stdin and files") {
    Run r = run({"apply", "--k", "0", "--json"}, "# analytic part\ne(1)*r^3\n");
    CHECK(json_of(r)["results"]["summary"] == "{degree 1: 2/3}");
    const std::string path = "cli_test_symbols.txt";
    {
        std::ofstream f(path);
        f << "z\nz^2\n";
    }
    Run c = run({"commutator", "--json", path});
    std::remove(path.c_str());
    CHECK(c.code == kExitOk);
    CHECK(json_of(c)["inputs"]["symbols"].size() == 2);
}

TEST_CASE("cli errors exit with code 2") {
    CHECK(run({"frobnicate"}).code == kExitError);
    CHECK(run({"apply", "-e", "z"}).code == kExitError);  // --k missing
    Run syn = run({"apply", "--k", "0", "-e", "e(1)*r^"});
    CHECK(syn.code == kExitError);
    CHECK(syn.err.find("position 7") != std::string::npos);
    CHECK(run({"apply", "--k", "0", "no-such-file.sym"}).code == kExitError);
    Run j = run({"compose", "--json", "-e", "z"});
    CHECK(j.code == kExitError);
    CHECK(json_of(j)["status"] == "error");
}

TEST_CASE("reports round-trip and are deterministic") {
    std::vector<std::vector<std::string>> commands = {
        {"apply", "--k", "2", "--json", "-e", "z + zbar"},
        {"square-check", "--json", "-e", kG5},
        {"solve-commutant", "--max-degree", "3", "--depth", "4", "--json", "-e", factorial_g(7)},
        {"verify", "--dim", "20", "--tol", "1e-10", "--json", "-e", "e(1)*r^3 + zbar", "-e", "z"},
    };
    for (const auto& args : commands) {
        Run a = run(args), b = run(args);
        CHECK(a.out == b.out);
        Report rep = Report::deserialize(a.out);
        CHECK(rep.serialize() == a.out);
        CHECK(Report::deserialize(rep.serialize()) == rep);
        CHECK(rep.tree()["schema"] == Report::kSchema);
        CHECK(rep.tree().contains("timings") == false);
    }
    CHECK_THROWS_AS(Report::deserialize("{\"schema\": \"other/9\"}"), std::invalid_argument);
    CHECK_THROWS_AS(Report::deserialize("not json"), std::invalid_argument);
    Report::Tree t = json_of(run({"apply", "--k", "0", "--json", "--timings", "-e", "z"}));
    CHECK(t.contains("timings"));
}

TEST_CASE("human rendering lists the status and results") {
    Run r = run({"square-check", "-e", kG5});
    CHECK(r.out.find("status: refuted") != std::string::npos);
    CHECK(r.out.find("toeplitz: false") != std::string::npos);
    CHECK(r.out.find("schema: qtoeplitz.report/1") != std::string::npos);
}
