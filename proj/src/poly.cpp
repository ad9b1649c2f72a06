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

#include "fsig/poly.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace fsig {

Ring::Ptr Ring::make(FieldSpec::Ptr field, std::vector<std::string> variables) {
    if (variables.empty()) throw IncompatibleSpec("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty() || !seen.insert(v).second) {
            throw IncompatibleSpec("ring variable names must be nonempty and distinct");
        }
    }
    auto r = std::make_shared<Ring>();
    r->field = std::move(field);
    r->variables = std::move(variables);
    return r;
}

bool Ring::same(const Ring& o) const {
    return field->same(*o.field) && variables == o.variables;
}

std::size_t Ring::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i] == name) return i;
    }
    return static_cast<std::size_t>(-1);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    Monomial m = one(nvars);
    m.exps.at(index) = power;
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    assert(exps.size() == m.exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > m.exps[i]) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    assert(exps.size() == m.exps.size());
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
    return r;
}

Monomial Monomial::quotient(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.exps.size() == b.exps.size());
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << names.at(i);
        if (exps[i] > 1) os << "^" << exps[i];
    }
    if (first) os << "1";
    return os.str();
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.exps.size() != b.exps.size()) {
        throw AmbientMismatch("monomials from different ambients");
    }
    const std::size_t n = a.exps.size();
    auto var_at = [&](std::size_t k) -> std::size_t {
        return precedence.empty() ? k : static_cast<std::size_t>(precedence[k]);
    };
    switch (kind) {
        case OrderKind::grevlex: {
            std::uint64_t da = a.total_degree(), db = b.total_degree();
            if (da != db) return da <=> db;
            // reverse-lex tie break: last nonzero difference, negated
            for (std::size_t k = n; k-- > 0;) {
                std::uint32_t ea = a.exps[var_at(k)], eb = b.exps[var_at(k)];
                if (ea != eb) return eb <=> ea;
            }
            return std::strong_ordering::equal;
        }
        case OrderKind::lex: {
            for (std::size_t k = 0; k < n; ++k) {
                std::uint32_t ea = a.exps[var_at(k)], eb = b.exps[var_at(k)];
                if (ea != eb) return ea <=> eb;
            }
            return std::strong_ordering::equal;
        }
    }
    throw Error("unreachable");
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring())) {
        throw AmbientMismatch("polynomials from different rings");
    }
}

std::uint64_t power_u64(long p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 58)) throw DegreeBudgetExceeded("p^e overflows");
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

namespace {

// canonical storage order: grevlex with declared precedence
const MonomialOrder& canonical_order() {
    static const MonomialOrder order = MonomialOrder::grevlex();
    return order;
}

}  // namespace

Polynomial::Polynomial(Ring::Ptr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    normalize(std::move(terms));
}

void Polynomial::normalize(std::vector<Term>&& raw) {
    std::map<Monomial, FieldElement> acc;
    for (auto& t : raw) {
        if (t.mono.exps.size() != ring_->nvars()) {
            throw AmbientMismatch("monomial arity does not match the ring");
        }
        if (t.mono.total_degree() > kDegreeBudget) {
            throw DegreeBudgetExceeded("monomial degree exceeds the budget");
        }
        if (t.coeff.is_zero()) continue;
        auto it = acc.find(t.mono);
        if (it == acc.end()) {
            acc.emplace(std::move(t.mono), std::move(t.coeff));
        } else {
            it->second = it->second + t.coeff;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc) terms_.push_back(Term{m, c});
    const auto& order = canonical_order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
}

Polynomial Polynomial::constant(Ring::Ptr ring, const FieldElement& c) {
    std::vector<Term> t;
    t.push_back(Term{Monomial::one(ring->nvars()), c});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(Ring::Ptr ring, std::size_t index) {
    std::vector<Term> t;
    t.push_back(Term{Monomial::variable(ring->nvars(), index), ring->field->one()});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_monomial(Ring::Ptr ring, const Monomial& m, const FieldElement& c) {
    std::vector<Term> t;
    t.push_back(Term{m, c});
    return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

FieldElement Polynomial::constant_coefficient() const {
    for (const auto& t : terms_) {
        if (t.mono.is_one()) return t.coeff;
    }
    return ring_->field->zero();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(ring_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    Polynomial r(ring_);
    r.terms_ = std::move(t);  // negation preserves sorting and nonzero-ness
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
        }
    }
    return Polynomial(ring_, std::move(prod));
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(*this, o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].mono == o.terms_[i].mono)) return false;
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = x.coeff * c;
    Polynomial r(ring_);
    r.terms_ = std::move(t);  // scaling by a unit preserves sorting
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        x.mono = x.mono * m;
        if (x.mono.total_degree() > kDegreeBudget) {
            throw DegreeBudgetExceeded("monomial degree exceeds the budget");
        }
        x.coeff = x.coeff * c;
    }
    Polynomial r(ring_);
    r.terms_ = std::move(t);  // multiplying by a fixed monomial preserves order
    return r;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
    std::uint64_t q = power_u64(ring_->field->characteristic(), e);
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        for (auto& exp : x.mono.exps) {
            std::uint64_t scaled = static_cast<std::uint64_t>(exp) * q;
            if (scaled > kDegreeBudget) {
                throw DegreeBudgetExceeded("Frobenius power exceeds the degree budget");
            }
            exp = static_cast<std::uint32_t>(scaled);
        }
        x.coeff = x.coeff.frobenius(e);
    }
    return Polynomial(ring_, std::move(t));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    assert(!terms_.empty());
    const Term* best = &terms_[0];
    for (const auto& t : terms_) {
        if (order.less(best->mono, t.mono)) best = &t;
    }
    return *best;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool mono_trivial = t.mono.is_one();
        if (t.coeff.is_one() && !mono_trivial) {
            os << t.mono.to_string(ring_->variables);
        } else if (mono_trivial) {
            os << t.coeff.to_string();
        } else {
            if (t.coeff.needs_parens_in_product()) {
                os << "(" << t.coeff.to_string() << ")";
            } else {
                os << t.coeff.to_string();
            }
            os << "*" << t.mono.to_string(ring_->variables);
        }
    }
    return os.str();
}

}  // namespace fsig
