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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qtoeplitz/radial.hpp"
#include "qtoeplitz/symbol_text.hpp"

using namespace qtoeplitz;
using namespace qtoeplitz::testing;

namespace {

PolarSymbol random_symbol(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), degree(-6, 6), num(-9, 12), den(1, 4), coeff(-7, 7), logs(0, 2);
    PolarSymbol s;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        GaussianRational c(Rational(coeff(rng), den(rng)), Rational(coeff(rng) / 3, den(rng)));
        s += PolarSymbol::monomial(degree(rng), c, Rational(num(rng), den(rng)), logs(rng));
    }
    return s;
}

std::size_t error_position(const std::string& text) {
    try {
        parse_symbol(text);
    } catch (const SyntaxError& e) {
        return e.position();
    }
    FAIL("no syntax error for " << text);
    return 0;
}

}  // namespace

TEST_CASE("symbol grammar: mixed polar and sugar terms") {
    SymbolDocument d = parse_symbol("1*e(1)*r^3 + (0,1)*zbar^2");
    PolarSymbol want = PolarSymbol::monomial(1, 1, Rational(3)) +
                       PolarSymbol::monomial(-2, GaussianRational::i(), Rational(2));
    CHECK(d.symbol == want);
    CHECK(d.symbol.components().size() == 2);
    CHECK(d.window == std::make_pair(-2, 1));
    CHECK(d.warnings.empty());
}

TEST_CASE("symbol grammar: z^2 is degree 2 with radial r^2") {
    SymbolDocument d = parse_symbol("z^2");
    REQUIRE(d.symbol.components().size() == 1);
    REQUIRE(d.symbol.component(2) != nullptr);
    CHECK(*d.symbol.component(2) == RadialSymbol::monomial(1, Rational(2)));
    CHECK(parse_symbol("zbar").symbol == PolarSymbol::zbar_power(1));
    CHECK(parse_symbol("3").symbol == PolarSymbol::constant(3));
}

TEST_CASE("symbol grammar: r^-2 parses but is not admissible") {
    SymbolDocument d = parse_symbol("1*e(0)*r^-2");
    REQUIRE(d.symbol.component(0) != nullptr);
    Admissibility a = is_admissible(*d.symbol.component(0));
    CHECK_FALSE(a.admissible);
    REQUIRE(a.witness.size() == 1);
    CHECK(a.witness[0].exponent == -2);
}

TEST_CASE("symbol grammar: factors multiply") {
    CHECK(parse_symbol("2*z*zbar").symbol == PolarSymbol::monomial(0, 2, Rational(2)));
    CHECK(parse_symbol("e(1)*r^(3/2)*log(r)^2").symbol == PolarSymbol::monomial(1, 1, Rational(3, 2), 2));
    CHECK(parse_symbol("-1/2*r^-3/2 + r^-3/2").symbol == PolarSymbol::monomial(0, q(1, 2), Rational(-3, 2)));
    CHECK(parse_symbol("  z  -  z ").symbol.is_zero());
}

TEST_CASE("symbol grammar: syntax errors carry a position") {
    CHECK(error_position("e(1)*r^") == 7);
    CHECK(error_position("2*q") == 2);
    CHECK(error_position("z + ") == 4);
    CHECK(error_position("(1,2*z") == 4);
    CHECK_THROWS_WITH_AS(parse_symbol("e(x)"), doctest::Contains("position"), SyntaxError);
}

TEST_CASE("symbol grammar: zero coefficients warn") {
    SymbolDocument d = parse_symbol("0*z + z^2");
    CHECK(d.symbol == PolarSymbol::z_power(2));
    CHECK_FALSE(d.warnings.empty());
}

TEST_CASE("printing is canonical") {
    CHECK(print_symbol(PolarSymbol()) == "0");
    CHECK(print_symbol(parse_symbol("zbar^2 + z").symbol) == "e(1)*r + e(-2)*r^2");
    CHECK(print_symbol(parse_symbol("-z + (1,-2)*r^-1").symbol) == "-e(1)*r + (1,-2)*e(0)*r^-1");
    CHECK(print_symbol(parse_symbol("r^2 + 3 + r^3").symbol) == "e(0)*r^3 + e(0)*r^2 + 3*e(0)");
}

TEST_CASE("documents: one symbol per line with comments and windows") {
    auto docs = parse_documents("# g\ne(1)*r^3 + zbar  # trailing\n\n# window: -3 2\nz\n0\n");
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].symbol == PolarSymbol::monomial(1, 1, Rational(3)) + PolarSymbol::zbar_power(1));
    CHECK(docs[1].window == std::make_pair(-3, 2));
    CHECK(docs[2].symbol.is_zero());
}

TEST_CASE("property: parse(print(s)) == s") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        PolarSymbol s = random_symbol(rng);
        std::string text = print_symbol(s);
        SymbolDocument d = parse_symbol(text);
        CHECK_MESSAGE(d.symbol == s, text);
        CHECK(print_symbol(d.symbol) == text);
    }
}
