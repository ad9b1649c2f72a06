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

#include "fsig/field.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace fsig {

bool is_prime_number(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

long mod_p(long v, long p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

// ---- F_p[w] helpers for extension fields (dense, degree <= 2m) ----

using Dense = std::vector<long>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense poly_mul(const Dense& a, const Dense& b, long p) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
        }
    }
    trim(r);
    return r;
}

// a mod b, b monic-normalizable
Dense poly_rem(Dense a, const Dense& b, long p) {
    trim(a);
    long binv = fp_inverse(b.back(), p);
    while (a.size() >= b.size()) {
        long c = mod_p(a.back() * binv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = mod_p(a[shift + i] - c * b[i], p);
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// extended Euclid: returns (g, s) with s*a = g mod b, g monic gcd
std::pair<Dense, Dense> poly_ext_gcd(Dense a, Dense b, long p) {
    Dense s0 = {1}, s1 = {};
    trim(a);
    trim(b);
    while (!b.empty()) {
        // division with remainder
        Dense q;
        Dense r = a;
        long binv = fp_inverse(b.back(), p);
        if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
        while (r.size() >= b.size() && !r.empty()) {
            long c = mod_p(r.back() * binv, p);
            std::size_t shift = r.size() - b.size();
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) {
                r[shift + i] = mod_p(r[shift + i] - c * b[i], p);
            }
            trim(r);
        }
        Dense s2 = s0;
        // s2 = s0 - q*s1
        Dense qs1 = poly_mul(q, s1, p);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = mod_p(s2[i] - qs1[i], p);
        trim(s2);
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
    }
    if (!a.empty() && a.back() != 1) {
        long inv = fp_inverse(a.back(), p);
        for (auto& c : a) c = mod_p(c * inv, p);
        for (auto& c : s0) c = mod_p(c * inv, p);
    }
    return {a, s0};
}

bool is_irreducible(const Dense& modulus, long p) {
    // trial division by every monic polynomial of degree 1..m/2
    std::size_t m = modulus.size() - 1;
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        Dense cand(d + 1, 0);
        cand[d] = 1;
        // odometer over the d lower coefficients
        while (true) {
            if (poly_rem(modulus, cand, p).empty()) return false;
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (++cand[i] < p) break;
                cand[i] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace

FieldSpec::Ptr FieldSpec::make_prime(long p, const FieldLimits& limits) {
    if (!is_prime_number(p)) {
        throw IncompatibleSpec("characteristic " + std::to_string(p) + " is not prime");
    }
    if (p > limits.max_characteristic) {
        throw IncompatibleSpec("characteristic " + std::to_string(p) + " exceeds the guard " +
                               std::to_string(limits.max_characteristic));
    }
    auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
    s->kind_ = FieldKind::prime;
    s->p_ = p;
    s->degree_ = 1;
    return s;
}

FieldSpec::Ptr FieldSpec::make_extension(long p, std::vector<long> modulus,
                                         std::string generator_name,
                                         const FieldLimits& limits) {
    if (!is_prime_number(p)) {
        throw IncompatibleSpec("characteristic " + std::to_string(p) + " is not prime");
    }
    if (p > limits.max_characteristic) {
        throw IncompatibleSpec("characteristic exceeds the guard");
    }
    for (auto& c : modulus) c = mod_p(c, p);
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 3) {
        throw IncompatibleSpec("extension modulus must have degree at least 2");
    }
    long m = static_cast<long>(modulus.size()) - 1;
    if (m > limits.max_extension_degree) {
        throw IncompatibleSpec("extension degree " + std::to_string(m) + " exceeds the guard " +
                               std::to_string(limits.max_extension_degree));
    }
    if (modulus.back() != 1) {
        throw IncompatibleSpec("extension modulus must be monic");
    }
    if (!is_irreducible(modulus, p)) {
        throw IncompatibleSpec("extension modulus is reducible over F_" + std::to_string(p));
    }
    auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
    s->kind_ = FieldKind::extension;
    s->p_ = p;
    s->degree_ = m;
    s->modulus_ = std::move(modulus);
    s->generator_name_ = std::move(generator_name);
    return s;
}

FieldSpec::Ptr FieldSpec::make_function(long p, std::vector<std::string> transcendentals,
                                        const FieldLimits& limits) {
    if (!is_prime_number(p)) {
        throw IncompatibleSpec("characteristic " + std::to_string(p) + " is not prime");
    }
    if (p > limits.max_characteristic) {
        throw IncompatibleSpec("characteristic exceeds the guard");
    }
    if (transcendentals.empty()) {
        throw IncompatibleSpec("function field needs at least one transcendental");
    }
    std::set<std::string> seen;
    for (const auto& t : transcendentals) {
        if (t.empty() || !seen.insert(t).second) {
            throw IncompatibleSpec("transcendental names must be nonempty and distinct");
        }
    }
    auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
    s->kind_ = FieldKind::function;
    s->p_ = p;
    s->degree_ = 1;
    s->transcendentals_ = std::move(transcendentals);
    return s;
}

std::uint64_t FieldSpec::order() const {
    if (!finite()) throw Error("order() called on an infinite field");
    std::uint64_t q = 1;
    for (long i = 0; i < degree_; ++i) q *= static_cast<std::uint64_t>(p_);
    return q;
}

FieldElement FieldSpec::zero() const { return from_integer(0); }

FieldElement FieldSpec::one() const { return from_integer(1); }

FieldElement FieldSpec::from_integer(long n) const {
    auto self = shared_from_this();
    switch (kind_) {
        case FieldKind::prime:
            return FieldElement(self, mod_p(n, p_));
        case FieldKind::extension: {
            std::vector<long> v(static_cast<std::size_t>(degree_), 0);
            v[0] = mod_p(n, p_);
            return FieldElement(self, std::move(v));
        }
        case FieldKind::function: {
            FieldFraction f;
            f.num = FpPoly::constant(p_, transcendentals_.size(), mod_p(n, p_));
            f.den = FpPoly::constant(p_, transcendentals_.size(), 1);
            return FieldElement(self, std::move(f));
        }
    }
    throw Error("unreachable");
}

FieldElement FieldSpec::generator() const {
    if (kind_ != FieldKind::extension) {
        throw IncompatibleSpec("generator() is only defined for extension fields");
    }
    std::vector<long> v(static_cast<std::size_t>(degree_), 0);
    v[1] = 1;
    return FieldElement(shared_from_this(), std::move(v));
}

FieldElement FieldSpec::transcendental(std::size_t i) const {
    if (kind_ != FieldKind::function) {
        throw IncompatibleSpec("transcendental() is only defined for function fields");
    }
    FieldFraction f;
    f.num = FpPoly::monomial(p_, transcendentals_.size(), i);
    f.den = FpPoly::constant(p_, transcendentals_.size(), 1);
    return FieldElement(shared_from_this(), std::move(f));
}

FieldElement FieldSpec::element_from_index(std::uint64_t index) const {
    switch (kind_) {
        case FieldKind::prime:
            return FieldElement(shared_from_this(), static_cast<long>(index % p_));
        case FieldKind::extension: {
            std::vector<long> v(static_cast<std::size_t>(degree_), 0);
            for (long i = 0; i < degree_; ++i) {
                v[static_cast<std::size_t>(i)] = static_cast<long>(index % p_);
                index /= static_cast<std::uint64_t>(p_);
            }
            return FieldElement(shared_from_this(), std::move(v));
        }
        case FieldKind::function:
            throw Error("element_from_index on an infinite field");
    }
    throw Error("unreachable");
}

std::uint64_t FieldSpec::index_of(const FieldElement& a) const {
    switch (kind_) {
        case FieldKind::prime:
            return static_cast<std::uint64_t>(a.prime_value());
        case FieldKind::extension: {
            std::uint64_t idx = 0;
            const auto& v = a.extension_coeffs();
            for (std::size_t i = v.size(); i-- > 0;) {
                idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(v[i]);
            }
            return idx;
        }
        case FieldKind::function:
            throw Error("index_of on an infinite field");
    }
    throw Error("unreachable");
}

bool FieldSpec::same(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && degree_ == o.degree_ && modulus_ == o.modulus_ &&
           generator_name_ == o.generator_name_ && transcendentals_ == o.transcendentals_;
}

std::string FieldSpec::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case FieldKind::prime:
            os << "GF(" << p_ << ")";
            break;
        case FieldKind::extension: {
            std::uint64_t q = order();
            os << "GF(" << q << ") mod ";
            bool first = true;
            for (std::size_t i = modulus_.size(); i-- > 0;) {
                if (modulus_[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0) {
                    os << modulus_[i];
                } else {
                    if (modulus_[i] != 1) os << modulus_[i] << "*";
                    os << generator_name_;
                    if (i > 1) os << "^" << i;
                }
            }
            break;
        }
        case FieldKind::function: {
            os << "GF(" << p_ << ")(";
            for (std::size_t i = 0; i < transcendentals_.size(); ++i) {
                if (i) os << ",";
                os << transcendentals_[i];
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------
// FieldElement

namespace {

void check_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same(*b.spec())) {
        throw AmbientMismatch("field elements from different fields");
    }
}

}  // namespace

FieldElement make_function_element(const FieldSpec::Ptr& spec, FpPoly num, FpPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        FieldFraction f;
        f.num = FpPoly(spec->characteristic(), spec->transcendentals().size());
        f.den = FpPoly::constant(spec->characteristic(), spec->transcendentals().size(), 1);
        return FieldElement(spec, std::move(f));
    }
    FpPoly g = FpPoly::gcd(num, den);
    if (!g.is_one()) {
        num = num.div_exact(g);
        den = den.div_exact(g);
    }
    long lc = den.leading_coefficient();
    if (lc != 1) {
        long inv = fp_inverse(lc, spec->characteristic());
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    FieldFraction f;
    f.num = std::move(num);
    f.den = std::move(den);
    return FieldElement(spec, std::move(f));
}

bool FieldElement::is_zero() const {
    switch (spec_->kind()) {
        case FieldKind::prime:
            return prime_value() == 0;
        case FieldKind::extension: {
            const auto& v = extension_coeffs();
            return std::all_of(v.begin(), v.end(), [](long c) { return c == 0; });
        }
        case FieldKind::function:
            return fraction().num.is_zero();
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (spec_->kind()) {
        case FieldKind::prime:
            return prime_value() == 1;
        case FieldKind::extension: {
            const auto& v = extension_coeffs();
            if (v[0] != 1) return false;
            return std::all_of(v.begin() + 1, v.end(), [](long c) { return c == 0; });
        }
        case FieldKind::function:
            return fraction().num.is_one() && fraction().den.is_one();
    }
    return false;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_spec(*this, o);
    long p = spec_->characteristic();
    switch (spec_->kind()) {
        case FieldKind::prime:
            return FieldElement(spec_, mod_p(prime_value() + o.prime_value(), p));
        case FieldKind::extension: {
            std::vector<long> v = extension_coeffs();
            const auto& w = o.extension_coeffs();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_p(v[i] + w[i], p);
            return FieldElement(spec_, std::move(v));
        }
        case FieldKind::function: {
            const auto& a = fraction();
            const auto& b = o.fraction();
            return make_function_element(spec_, a.num * b.den + b.num * a.den, a.den * b.den);
        }
    }
    throw Error("unreachable");
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    long p = spec_->characteristic();
    switch (spec_->kind()) {
        case FieldKind::prime:
            return FieldElement(spec_, mod_p(-prime_value(), p));
        case FieldKind::extension: {
            std::vector<long> v = extension_coeffs();
            for (auto& c : v) c = mod_p(-c, p);
            return FieldElement(spec_, std::move(v));
        }
        case FieldKind::function: {
            const auto& a = fraction();
            FieldFraction f;
            f.num = -a.num;
            f.den = a.den;
            return FieldElement(spec_, std::move(f));
        }
    }
    throw Error("unreachable");
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_spec(*this, o);
    long p = spec_->characteristic();
    switch (spec_->kind()) {
        case FieldKind::prime:
            return FieldElement(spec_, mod_p(prime_value() * o.prime_value(), p));
        case FieldKind::extension: {
            const auto& a = extension_coeffs();
            const auto& b = o.extension_coeffs();
            Dense prod = poly_mul(a, b, p);
            if (!prod.empty() && prod.size() >= spec_->modulus().size()) {
                prod = poly_rem(prod, spec_->modulus(), p);
            }
            prod.resize(static_cast<std::size_t>(spec_->extension_degree()), 0);
            return FieldElement(spec_, std::move(prod));
        }
        case FieldKind::function: {
            const auto& a = fraction();
            const auto& b = o.fraction();
            return make_function_element(spec_, a.num * b.num, a.den * b.den);
        }
    }
    throw Error("unreachable");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    long p = spec_->characteristic();
    switch (spec_->kind()) {
        case FieldKind::prime:
            return FieldElement(spec_, fp_inverse(prime_value(), p));
        case FieldKind::extension: {
            Dense a = extension_coeffs();
            trim(a);
            auto [g, s] = poly_ext_gcd(a, spec_->modulus(), p);
            assert(g.size() == 1 && g[0] == 1);
            if (s.size() >= spec_->modulus().size()) s = poly_rem(s, spec_->modulus(), p);
            s.resize(static_cast<std::size_t>(spec_->extension_degree()), 0);
            return FieldElement(spec_, std::move(s));
        }
        case FieldKind::function: {
            const auto& a = fraction();
            return make_function_element(spec_, a.den, a.num);
        }
    }
    throw Error("unreachable");
}

FieldElement FieldElement::pow(std::uint64_t n) const {
    FieldElement result = spec_->one();
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

FieldElement FieldElement::frobenius(unsigned e) const {
    switch (spec_->kind()) {
        case FieldKind::prime:
            return *this;  // a^p = a
        case FieldKind::extension: {
            FieldElement r = *this;
            for (unsigned i = 0; i < e; ++i) {
                r = r.pow(static_cast<std::uint64_t>(spec_->characteristic()));
            }
            return r;
        }
        case FieldKind::function: {
            // coefficients in F_p are Frobenius-fixed; exponents scale
            std::uint32_t q = 1;
            for (unsigned i = 0; i < e; ++i) q *= static_cast<std::uint32_t>(spec_->characteristic());
            FieldFraction f;
            f.num = fraction().num.scale_all_exponents(q);
            f.den = fraction().den.scale_all_exponents(q);
            return FieldElement(spec_, std::move(f));
        }
    }
    throw Error("unreachable");
}

FieldElement FieldElement::pth_root() const {
    switch (spec_->kind()) {
        case FieldKind::prime:
            return *this;  // x -> x^p fixes F_p pointwise
        case FieldKind::extension: {
            // Frobenius has order m, so the root is m-1 further applications
            FieldElement r = *this;
            for (long i = 0; i + 1 < spec_->extension_degree(); ++i) {
                r = r.pow(static_cast<std::uint64_t>(spec_->characteristic()));
            }
            return r;
        }
        case FieldKind::function: {
            auto q = static_cast<std::uint32_t>(spec_->characteristic());
            FieldFraction f;
            if (!fraction().num.try_unscale_all_exponents(q, f.num) ||
                !fraction().den.try_unscale_all_exponents(q, f.den)) {
                throw NotAPthPower(to_string() + " is not a p-th power in " + spec_->to_string());
            }
            return FieldElement(spec_, std::move(f));
        }
    }
    throw Error("unreachable");
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_spec(*this, o);
    return value_ == o.value_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same_spec(*this, o);
    return value_ < o.value_;
}

bool FieldElement::needs_parens_in_product() const {
    switch (spec_->kind()) {
        case FieldKind::prime:
            return false;
        case FieldKind::extension: {
            const auto& v = extension_coeffs();
            int nonzero = 0;
            for (long c : v) nonzero += (c != 0);
            return nonzero > 1;
        }
        case FieldKind::function:
            return fraction().num.term_count() > 1 || !fraction().den.is_one();
    }
    return true;
}

std::string FieldElement::to_string() const {
    switch (spec_->kind()) {
        case FieldKind::prime:
            return std::to_string(prime_value());
        case FieldKind::extension: {
            const auto& v = extension_coeffs();
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = v.size(); i-- > 0;) {
                if (v[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                if (i == 0) {
                    os << v[i];
                } else {
                    if (v[i] != 1) os << v[i] << "*";
                    os << spec_->generator_name();
                    if (i > 1) os << "^" << i;
                }
            }
            if (first) os << "0";
            return os.str();
        }
        case FieldKind::function: {
            const auto& f = fraction();
            const auto& names = spec_->transcendentals();
            if (f.den.is_one()) return f.num.to_string(names);
            return "(" + f.num.to_string(names) + ")/(" + f.den.to_string(names) + ")";
        }
    }
    throw Error("unreachable");
}

}  // namespace fsig
