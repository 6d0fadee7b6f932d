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

#include "qtoeplitz/symbol_text.hpp"

#include <cctype>
#include <sstream>

namespace qtoeplitz {

SyntaxError::SyntaxError(const std::string& message, std::size_t position)
    : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

struct Monomial {
    GaussianRational coefficient{1};
    int degree = 0;
    Rational exponent{0};
    int log_power = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    SymbolDocument run() {
        SymbolDocument doc;
        doc.source = s_;
        skip();
        if (at_end()) throw SyntaxError("empty symbol", pos_);
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            const std::size_t start = pos_;
            Monomial m = term();
            if (negative) m.coefficient = -m.coefficient;
            if (m.coefficient.is_zero())
                doc.warnings.push_back("zero coefficient in term at position " + std::to_string(start));
            doc.symbol += PolarSymbol::monomial(m.degree, m.coefficient, m.exponent, m.log_power);
            skip();
            if (at_end()) break;
            if (peek() == '+') {
                negative = false;
            } else if (peek() == '-') {
                negative = true;
            } else {
                throw SyntaxError(std::string("expected '+' or '-', got '") + peek() + "'", pos_);
            }
            ++pos_;
        }
        doc.window = {doc.symbol.min_degree(), doc.symbol.max_degree()};
        return doc;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(const std::string& word) {
        skip();
        if (s_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }
    void expect(char c) {
        skip();
        if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected digits", pos_);
        return s_.substr(start, pos_ - start);
    }

    long integer() {
        skip();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        std::string d = digits();
        if (d.size() > 9) throw SyntaxError("integer too large", start);
        long v = std::stol(d);
        return neg ? -v : v;
    }

    Rational rational(bool allow_sign) {
        skip();
        std::string text;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            if (peek() == '-') text = "-";
            ++pos_;
        }
        text += digits();
        skip();
        if (peek() == '/') {
            ++pos_;
            const std::size_t at = pos_;
            std::string den = digits();
            if (den.find_first_not_of('0') == std::string::npos) throw SyntaxError("zero denominator", at);
            text += "/" + den;
        }
        Rational q(text);
        q.canonicalize();
        return q;
    }

    int small_power() {
        skip();
        if (peek() != '^') return 1;
        ++pos_;
        skip();
        const std::size_t at = pos_;
        bool paren = peek() == '(';
        if (paren) ++pos_;
        long v = integer();
        if (paren) expect(')');
        if (v < 0) throw SyntaxError("power must be nonnegative", at);
        return static_cast<int>(v);
    }

    Monomial term() {
        Monomial m;
        factor(m);
        while (true) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            factor(m);
        }
        return m;
    }

    void factor(Monomial& m) {
        skip();
        const std::size_t at = pos_;
        if (at_end()) throw SyntaxError("unexpected end of input", pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            m.coefficient *= GaussianRational(rational(false));
            return;
        }
        if (c == '(') {
            ++pos_;
            Rational re = rational(true);
            expect(',');
            Rational im = rational(true);
            expect(')');
            m.coefficient *= GaussianRational(re, im);
            return;
        }
        if (accept("e(")) {
            m.degree += static_cast<int>(integer());
            expect(')');
            return;
        }
        if (accept("log(")) {
            expect('r');
            expect(')');
            m.log_power += small_power();
            return;
        }
        if (accept("zbar")) {
            int l = small_power();
            m.degree -= l;
            m.exponent += l;
            return;
        }
        if (accept("z")) {
            int l = small_power();
            m.degree += l;
            m.exponent += l;
            return;
        }
        if (accept("r")) {
            skip();
            if (peek() != '^') {
                m.exponent += 1;
                return;
            }
            ++pos_;
            skip();
            if (peek() == '(') {
                ++pos_;
                m.exponent += rational(true);
                expect(')');
            } else {
                m.exponent += rational(true);
            }
            return;
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", at);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const GaussianRational& c, int degree, const RadialTerm& t) {
    std::string body = "e(" + std::to_string(degree) + ")";
    if (t.exponent == 1) body += "*r";
    else if (t.exponent != 0) body += "*r^" + to_string(t.exponent);
    if (t.log_power == 1) body += "*log(r)";
    if (t.log_power > 1) body += "*log(r)^" + std::to_string(t.log_power);
    if (c.is_one()) return body;
    if ((-c).is_one()) return "-" + body;
    return c.str() + "*" + body;
}

}  // namespace

SymbolDocument parse_symbol(const std::string& text) { return Parser(text).run(); }

std::string print_symbol(const PolarSymbol& s) {
    std::string out;
    const auto& comps = s.components();
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
        const auto& terms = it->second.terms();
        for (auto t = terms.rbegin(); t != terms.rend(); ++t) {
            GaussianRational c = t->coefficient;
            bool negative = c.is_real() && sgn(c.re()) < 0;
            if (out.empty()) {
                out = monomial_text(c, it->first, *t);
            } else if (negative) {
                out += " - " + monomial_text(-c, it->first, *t);
            } else {
                out += " + " + monomial_text(c, it->first, *t);
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::vector<SymbolDocument> parse_documents(const std::string& text) {
    std::vector<SymbolDocument> out;
    std::istringstream in(text);
    std::string line;
    std::pair<int, int> window{0, 0};
    bool windowed = false;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream c(line.substr(hash + 1));
            std::string key;
            int lo = 0, hi = 0;
            if (c >> key && key == "window:" && c >> lo >> hi) {
                window = {lo, hi};
                windowed = true;
            }
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        SymbolDocument doc = line == "0" || line.find_first_not_of(" \t\r0") == std::string::npos
                                 ? SymbolDocument{PolarSymbol(), line, {0, 0}, {}}
                                 : parse_symbol(line);
        if (windowed) doc.window = window;
        windowed = false;
        out.push_back(std::move(doc));
    }
    return out;
}

}  // namespace qtoeplitz
