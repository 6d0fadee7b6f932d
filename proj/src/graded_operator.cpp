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

#include "qtoeplitz/graded_operator.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtoeplitz {

// ---------------------------------------------------------------- PolarSymbol

PolarSymbol::PolarSymbol(std::map<int, RadialSymbol> components) : c_(std::move(components)) {
    std::erase_if(c_, [](const auto& kv) { return kv.second.is_zero(); });
}

PolarSymbol PolarSymbol::monomial(int degree, const GaussianRational& c, const Rational& exponent, int log_power) {
    return PolarSymbol({{degree, RadialSymbol::monomial(c, exponent, log_power)}});
}

PolarSymbol PolarSymbol::z_power(int l, const GaussianRational& c) { return monomial(l, c, Rational(l)); }

PolarSymbol PolarSymbol::zbar_power(int l, const GaussianRational& c) { return monomial(-l, c, Rational(l)); }

const RadialSymbol* PolarSymbol::component(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? nullptr : &it->second;
}

PolarSymbol& PolarSymbol::operator+=(const PolarSymbol& o) {
    for (const auto& [d, phi] : o.c_) c_[d] += phi;
    std::erase_if(c_, [](const auto& kv) { return kv.second.is_zero(); });
    return *this;
}

PolarSymbol operator*(const GaussianRational& s, const PolarSymbol& a) {
    std::map<int, RadialSymbol> c;
    for (const auto& [d, phi] : a.c_) c[d] = s * phi;
    return PolarSymbol(std::move(c));
}

// ------------------------------------------------------------ PiecewiseWeight

namespace {

GaussianRational at_index(const RationalFunction& f, long k) { return f(GaussianRational(2 * k)); }

const RationalFunction* active(const std::vector<PiecewiseWeight::Segment>& s, long k) {
    const RationalFunction* r = nullptr;
    for (const auto& seg : s) {
        if (seg.start > k) break;
        r = &seg.tail;
    }
    return r;
}

using Combine = std::function<RationalFunction(const RationalFunction*, const RationalFunction*)>;

PiecewiseWeight combine(const PiecewiseWeight& a, const PiecewiseWeight& b, const Combine& op) {
    std::set<long> breaks;
    for (const auto& s : a.segments()) breaks.insert(s.start);
    for (const auto& s : b.segments()) breaks.insert(s.start);
    std::vector<PiecewiseWeight::Segment> out;
    for (long k : breaks) out.push_back({k, op(active(a.segments(), k), active(b.segments(), k))});
    return PiecewiseWeight(std::move(out));
}

}  // namespace

PiecewiseWeight::PiecewiseWeight(std::vector<Segment> segments) : s_(std::move(segments)) { canonicalize(); }

PiecewiseWeight PiecewiseWeight::from(long start, const RationalFunction& tail) {
    return PiecewiseWeight({Segment{start, tail}});
}

RationalFunction PiecewiseWeight::tail() const { return s_.empty() ? RationalFunction() : s_.back().tail; }

GaussianRational PiecewiseWeight::operator()(long k) const {
    const RationalFunction* f = active(s_, k);
    if (f == nullptr || f->is_zero()) return {};
    return at_index(*f, k);
}

void PiecewiseWeight::canonicalize() {
    std::stable_sort(s_.begin(), s_.end(), [](const Segment& a, const Segment& b) { return a.start < b.start; });
    // Later duplicates of a start win.
    std::vector<Segment> v;
    for (auto& seg : s_) {
        if (!v.empty() && v.back().start == seg.start) v.back() = std::move(seg);
        else v.push_back(std::move(seg));
    }
    // Clip to k >= 0: the last segment starting at or below 0 covers 0.
    std::size_t first = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].start <= 0) first = i;
    v.erase(v.begin(), v.begin() + static_cast<long>(first));
    if (!v.empty() && v.front().start < 0) v.front().start = 0;

    auto values_match = [](const RationalFunction& f, long from, long to, const RationalFunction* g) {
        try {
            for (long k = from; k < to; ++k) {
                GaussianRational x = f.is_zero() ? GaussianRational() : at_index(f, k);
                GaussianRational y = (g == nullptr || g->is_zero()) ? GaussianRational() : at_index(*g, k);
                if (x != y) return false;
            }
        } catch (const PoleError&) {
            return false;
        }
        return true;
    };
    static const RationalFunction kZero;
    // Finite segments that vanish at every index become explicit zeros.
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!v[i].tail.is_zero() && values_match(v[i].tail, v[i].start, v[i + 1].start, &kZero)) v[i].tail = RationalFunction();
    // Extend later segments backwards over earlier ones they agree with.
    for (std::size_t i = v.size(); i-- > 1;) {
        Segment& prev = v[i - 1];
        const Segment& cur = v[i];
        long end = cur.start;
        if (prev.tail == cur.tail || values_match(prev.tail, prev.start, end, &cur.tail)) {
            prev.tail = cur.tail;
            v.erase(v.begin() + static_cast<long>(i));
        }
    }
    while (!v.empty() && v.front().tail.is_zero()) v.erase(v.begin());
    s_ = std::move(v);
}

PiecewiseWeight PiecewiseWeight::index_shifted(long q) const {
    std::vector<Segment> v;
    // Starts are >= 0, so indices with k + q < 0 stay in the zero prefix.
    for (const auto& seg : s_) v.push_back({seg.start - q, seg.tail.shifted(GaussianRational(2 * q))});
    return PiecewiseWeight(std::move(v));
}

PiecewiseWeight PiecewiseWeight::restricted_from(long m) const {
    if (m <= 0 || s_.empty()) return *this;
    std::vector<Segment> v{{0, RationalFunction()}};
    const RationalFunction* at_m = active(s_, m);
    v.push_back({m, at_m ? *at_m : RationalFunction()});
    for (const auto& seg : s_)
        if (seg.start > m) v.push_back(seg);
    return PiecewiseWeight(std::move(v));
}

PiecewiseWeight& PiecewiseWeight::operator+=(const PiecewiseWeight& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    *this = combine(*this, o, [](const RationalFunction* x, const RationalFunction* y) {
        if (x == nullptr) return y ? *y : RationalFunction();
        if (y == nullptr) return *x;
        return *x + *y;
    });
    return *this;
}

PiecewiseWeight operator-(const PiecewiseWeight& a, const PiecewiseWeight& b) {
    return a + GaussianRational(-1) * b;
}

PiecewiseWeight operator*(const PiecewiseWeight& a, const PiecewiseWeight& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return combine(a, b, [](const RationalFunction* x, const RationalFunction* y) {
        if (x == nullptr || y == nullptr) return RationalFunction();
        return *x * *y;
    });
}

PiecewiseWeight operator*(const GaussianRational& s, const PiecewiseWeight& a) {
    if (s.is_zero()) return {};
    std::vector<PiecewiseWeight::Segment> v = a.s_;
    for (auto& seg : v) seg.tail *= RationalFunction(s);
    return PiecewiseWeight(std::move(v));
}

bool PiecewiseWeight::same_values(const PiecewiseWeight& o) const { return (*this - o).is_zero(); }

std::string PiecewiseWeight::str() const {
    if (s_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (i) os << "; ";
        os << "k>=" << s_[i].start << ": " << s_[i].tail.str("u");
    }
    return os.str();
}

// ------------------------------------------------------------- GradedOperator

GradedOperator::GradedOperator(std::map<int, PiecewiseWeight> parts) : parts_(std::move(parts)) { canonicalize(); }

void GradedOperator::canonicalize() {
    for (auto& [p, w] : parts_)
        if (p < 0) w = w.restricted_from(-p);
    std::erase_if(parts_, [](const auto& kv) { return kv.second.is_zero(); });
}

GradedOperator GradedOperator::identity() { return scalar(1); }

GradedOperator GradedOperator::scalar(const GaussianRational& c) {
    return GradedOperator({{0, PiecewiseWeight::from(0, RationalFunction(c))}});
}

const PiecewiseWeight& GradedOperator::part(int degree) const {
    static const PiecewiseWeight kZero;
    auto it = parts_.find(degree);
    return it == parts_.end() ? kZero : it->second;
}

GradedOperator GradedOperator::window(int lo, int hi) const {
    std::map<int, PiecewiseWeight> p;
    for (const auto& [d, w] : parts_)
        if (d >= lo && d <= hi) p.emplace(d, w);
    return GradedOperator(std::move(p));
}

GradedOperator& GradedOperator::operator+=(const GradedOperator& o) {
    for (const auto& [d, w] : o.parts_) parts_[d] += w;
    canonicalize();
    return *this;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return a + GaussianRational(-1) * b; }

GradedOperator operator*(const GaussianRational& s, const GradedOperator& a) {
    std::map<int, PiecewiseWeight> p;
    for (const auto& [d, w] : a.parts_) p.emplace(d, s * w);
    return GradedOperator(std::move(p));
}

std::string GradedOperator::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!first) os << "\n";
        first = false;
        os << "degree " << it->first << ": " << it->second.str();
    }
    return os.str();
}

// ------------------------------------------------------------------ calculus

PiecewiseWeight toeplitz_weight(int degree, const RadialSymbol& phi) {
    if (phi.is_zero()) return {};
    const GaussianRational p(degree);
    RationalFunction u = RationalFunction::variable();
    RationalFunction w = (u + RationalFunction(GaussianRational(2) * p + GaussianRational(2))) *
                         mellin(phi).shifted(p + GaussianRational(2));
    return PiecewiseWeight::from(std::max(0, -degree), w);
}

GradedOperator from_symbol(const PolarSymbol& f) {
    std::map<int, PiecewiseWeight> parts;
    for (const auto& [d, phi] : f.components()) parts.emplace(d, toeplitz_weight(d, phi));
    return GradedOperator(std::move(parts));
}

std::map<int, GaussianRational> apply(const GradedOperator& t, long k) {
    if (k < 0) throw std::invalid_argument("basis index must be nonnegative");
    std::map<int, GaussianRational> out;
    for (const auto& [p, w] : t.parts()) {
        if (k + p < 0) continue;
        GaussianRational v = w(k);
        if (!v.is_zero()) out.emplace(p, v);
    }
    return out;
}

namespace {

// (S_p o T_q)(z^k) = W_T,q(k) * W_S,p(k+q) z^{k+p+q}
PiecewiseWeight product_weight(const PiecewiseWeight& sp, const PiecewiseWeight& tq, int q) {
    return tq * sp.index_shifted(q);
}

}  // namespace

PiecewiseWeight compose_component(const GradedOperator& s, const GradedOperator& t, int degree) {
    PiecewiseWeight sum;
    for (const auto& [q, tw] : t.parts()) {
        auto it = s.parts().find(degree - q);
        if (it == s.parts().end()) continue;
        sum += product_weight(it->second, tw, q);
    }
    return degree < 0 ? sum.restricted_from(-degree) : sum;
}

GradedOperator compose(const GradedOperator& s, const GradedOperator& t) {
    std::map<int, PiecewiseWeight> parts;
    for (const auto& [p, sw] : s.parts())
        for (const auto& [q, tw] : t.parts()) parts[p + q] += product_weight(sw, tw, q);
    return GradedOperator(std::move(parts));
}

GradedOperator power(const GradedOperator& t, int n) {
    if (n < 1) throw std::invalid_argument("power exponent must be positive");
    GradedOperator r = t;
    for (int i = 1; i < n; ++i) r = compose(r, t);
    return r;
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) { return compose(a, b) - compose(b, a); }

PiecewiseWeight commutator_component(const GradedOperator& a, const GradedOperator& b, int degree) {
    return compose_component(a, b, degree) - compose_component(b, a, degree);
}

bool equals(const GradedOperator& a, const GradedOperator& b) { return (a - b).is_zero(); }

std::vector<std::vector<GaussianRational>> to_matrix(const GradedOperator& t, long dim) {
    if (dim < 0) throw std::invalid_argument("negative truncation dimension");
    const auto n = static_cast<std::size_t>(dim + 1);
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
    for (const auto& [p, w] : t.parts())
        for (long k = std::max(0L, -static_cast<long>(p)); k <= dim && k + p <= dim; ++k)
            m[static_cast<std::size_t>(k + p)][static_cast<std::size_t>(k)] = w(k);
    return m;
}

ToeplitzRecovery toeplitz_symbol_of(const GradedOperator& t) {
    ToeplitzRecovery r;
    std::map<int, RadialSymbol> components;
    for (auto it = t.parts().rbegin(); it != t.parts().rend(); ++it) {
        const int p = it->first;
        const PiecewiseWeight& w = it->second;
        r.degree = p;
        const GaussianRational gp(p);
        // W(u) = (u+2p+2) F(u+p+2)  =>  F(z) = W(z-p-2)/(z+p)
        RationalFunction image = w.tail().shifted(-gp - GaussianRational(2)) /
                                 RationalFunction(Polynomial::linear(gp));
        RadialSymbol phi;
        try {
            phi = inverse_mellin(image);
        } catch (const std::domain_error& e) {
            r.message = "not Toeplitz: degree " + std::to_string(p) + ": " + e.what();
            return r;
        }
        Admissibility adm = is_admissible(phi);
        if (!adm.admissible) {
            r.witness = adm.witness;
            RadialSymbol bad(adm.witness);
            r.message = "not Toeplitz: non-admissible symbol at degree " + std::to_string(p) + " (witness " +
                        bad.str() + ")";
            return r;
        }
        PiecewiseWeight expected = toeplitz_weight(p, phi);
        PiecewiseWeight diff = expected - w;
        if (!diff.is_zero()) {
            long k = diff.segments().front().start;
            while (diff(k).is_zero()) ++k;
            r.index = k;
            r.message = "not Toeplitz: truncation mismatch at degree " + std::to_string(p) + ", index " +
                        std::to_string(k);
            return r;
        }
        components.emplace(p, std::move(phi));
    }
    r.ok = true;
    r.symbol = PolarSymbol(std::move(components));
    r.message = "Toeplitz";
    return r;
}

SquareCheck square_check(const PolarSymbol& g) {
    SquareCheck out;
    const RadialSymbol* top = g.component(1);
    if (top == nullptr || *top != RadialSymbol::monomial(1, Rational(3)))
        throw std::invalid_argument("square-check expects g = e(1)*r^3 + sum a_l zbar^l");
    for (const auto& [d, phi] : g.components()) {
        if (d == 1) continue;
        if (d >= 0 || phi.terms().size() != 1 || phi.terms()[0].exponent != -d || phi.terms()[0].log_power != 0)
            throw std::invalid_argument("square-check expects g = e(1)*r^3 + sum a_l zbar^l; bad degree " +
                                        std::to_string(d));
        out.m = std::max(out.m, -d);
    }
    GradedOperator tg = from_symbol(g);
    out.recovery = toeplitz_symbol_of(compose(tg, tg));
    return out;
}

}  // namespace qtoeplitz
