/*
   Copyright 2026 The fsig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fsig/fppoly.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fsig {

long fp_inverse(long value, long p) {
    value %= p;
    if (value < 0) value += p;
    if (value == 0) throw DivisionByZero();
    // extended Euclid on (value, p)
    long a = value, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    assert(a == 1);
    x0 %= p;
    if (x0 < 0) x0 += p;
    return x0;
}

long FpPoly::normalize_residue(long v) const {
    v %= p_;
    if (v < 0) v += p_;
    return v;
}

FpPoly FpPoly::constant(long p, std::size_t nvars, long value) {
    FpPoly r(p, nvars);
    r.add_term(Exponents(nvars, 0), value);
    return r;
}

FpPoly FpPoly::monomial(long p, std::size_t nvars, std::size_t index,
                        std::uint32_t power, long coeff) {
    FpPoly r(p, nvars);
    Exponents e(nvars, 0);
    e.at(index) = power;
    r.add_term(e, coeff);
    return r;
}

bool FpPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

bool FpPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

long FpPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

std::uint64_t FpPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t t = 0;
        for (auto x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void FpPoly::add_term(const Exponents& e, long coeff) {
    assert(e.size() == nvars_);
    coeff = normalize_residue(coeff);
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second = normalize_residue(it->second + coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly r(p_, nvars_);
    Exponents sum(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) sum[i] = e1[i] + e2[i];
            r.add_term(sum, c1 * c2);
        }
    }
    return r;
}

FpPoly FpPoly::scaled(long c) const {
    FpPoly r(p_, nvars_);
    for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
    return r;
}

const FpPoly::Exponents& FpPoly::leading_exponents() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

long FpPoly::leading_coefficient() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

FpPoly FpPoly::div_exact(const FpPoly& divisor) const {
    assert(!divisor.is_zero());
    FpPoly rem = *this;
    FpPoly quot(p_, nvars_);
    const Exponents& dl = divisor.leading_exponents();
    long dinv = fp_inverse(divisor.leading_coefficient(), p_);
    Exponents q(nvars_);
    while (!rem.is_zero()) {
        const Exponents& rl = rem.leading_exponents();
        bool divisible = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rl[i] < dl[i]) {
                divisible = false;
                break;
            }
            q[i] = rl[i] - dl[i];
        }
        if (!divisible) {
            throw Error("internal: FpPoly::div_exact on a non-multiple");
        }
        long c = normalize_residue(rem.leading_coefficient() * dinv);
        FpPoly qt(p_, nvars_);
        qt.add_term(q, c);
        quot = quot + qt;
        rem = rem - qt * divisor;
    }
    return quot;
}

FpPoly FpPoly::scale_exponents(std::size_t index, std::uint32_t k) const {
    FpPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        e2[index] *= k;
        r.add_term(e2, c);
    }
    return r;
}

FpPoly FpPoly::scale_all_exponents(std::uint32_t k) const {
    FpPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        for (auto& x : e2) x *= k;
        r.add_term(e2, c);
    }
    return r;
}

bool FpPoly::try_unscale_all_exponents(std::uint32_t k, FpPoly& out) const {
    FpPoly r(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        for (auto& x : e2) {
            if (x % k != 0) return false;
            x /= k;
        }
        r.add_term(e2, c);
    }
    out = r;
    return true;
}

FpPoly FpPoly::remap_variables(std::size_t new_nvars,
                               const std::vector<std::size_t>& new_index) const {
    assert(new_index.size() == nvars_);
    FpPoly r(p_, new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents e2(new_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) e2[new_index[i]] += e[i];
        r.add_term(e2, c);
    }
    return r;
}

namespace {

// Highest variable index occurring in f, or -1 for constants.
int top_variable(const FpPoly& f) {
    int top = -1;
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) top = std::max(top, static_cast<int>(i));
        }
    }
    return top;
}

// View f as univariate in variable v: coefficient polynomial per degree.
std::map<std::uint32_t, FpPoly> coefficients_in(const FpPoly& f, std::size_t v) {
    std::map<std::uint32_t, FpPoly> out;
    for (const auto& [e, c] : f.terms()) {
        FpPoly::Exponents rest = e;
        std::uint32_t d = rest[v];
        rest[v] = 0;
        auto it = out.find(d);
        if (it == out.end()) {
            FpPoly coeff(f.characteristic(), f.nvars());
            coeff.add_term(rest, c);
            out.emplace(d, std::move(coeff));
        } else {
            it->second.add_term(rest, c);
        }
    }
    return out;
}

std::uint32_t degree_in(const std::map<std::uint32_t, FpPoly>& coeffs) {
    return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

FpPoly content_in(const FpPoly& f, std::size_t v) {
    FpPoly g(f.characteristic(), f.nvars());
    for (const auto& [d, coeff] : coefficients_in(f, v)) {
        g = FpPoly::gcd(g, coeff);
    }
    return g;
}

// Pseudo-remainder of f by g, both univariate in v with polynomial
// coefficients: lc(g)^(deg f - deg g + 1) * f mod g.
FpPoly pseudo_remainder(const FpPoly& f, const FpPoly& g, std::size_t v) {
    auto gc = coefficients_in(g, v);
    std::uint32_t dg = degree_in(gc);
    FpPoly glead = gc.rbegin()->second;
    FpPoly rem = f;
    while (!rem.is_zero()) {
        auto rc = coefficients_in(rem, v);
        std::uint32_t dr = degree_in(rc);
        if (dr < dg) break;
        FpPoly rlead = rc.rbegin()->second;
        // rem <- glead * rem - rlead * x_v^(dr-dg) * g
        FpPoly shift = FpPoly::monomial(f.characteristic(), f.nvars(), v, dr - dg);
        rem = glead * rem - rlead * shift * g;
    }
    return rem;
}

}  // namespace

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero() || b.is_zero()) {
        const FpPoly& f = a.is_zero() ? b : a;
        // normalized: leading coefficient 1
        return f.scaled(fp_inverse(f.leading_coefficient(), f.characteristic()));
    }
    int va = top_variable(a), vb = top_variable(b);
    int v = std::max(va, vb);
    if (v < 0) return FpPoly::constant(a.characteristic(), a.nvars(), 1);

    // primitive PRS in the top variable, contents handled recursively
    FpPoly ca = content_in(a, static_cast<std::size_t>(v));
    FpPoly cb = content_in(b, static_cast<std::size_t>(v));
    FpPoly cg = gcd(ca, cb);
    FpPoly f = a.div_exact(ca);
    FpPoly g = b.div_exact(cb);
    if (degree_in(coefficients_in(f, v)) < degree_in(coefficients_in(g, v))) std::swap(f, g);
    while (!g.is_zero()) {
        FpPoly r = pseudo_remainder(f, g, static_cast<std::size_t>(v));
        f = g;
        if (r.is_zero()) {
            g = r;
        } else {
            g = r.div_exact(content_in(r, static_cast<std::size_t>(v)));
        }
    }
    FpPoly result = cg * f.div_exact(content_in(f, static_cast<std::size_t>(v)));
    return result.scaled(fp_inverse(result.leading_coefficient(), result.characteristic()));
}

std::string FpPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << "+";
        first = false;
        const auto& [e, c] = *it;
        bool any_var = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
        bool printed = false;
        if (c != 1 || !any_var) {
            os << c;
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace fsig
