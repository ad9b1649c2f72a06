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

#ifndef FSIG_POLY_HPP
#define FSIG_POLY_HPP

#include "fsig/field.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fsig {

/// Any monomial whose total degree passes this bound aborts the run
/// with DegreeBudgetExceeded; runaway inputs fail fast.
inline constexpr std::uint64_t kDegreeBudget = 1u << 20;

/// The ambient polynomial ring context: coefficient field plus ordered
/// variable names.  Shared by pointer between all values built over it.
struct Ring {
    using Ptr = std::shared_ptr<const Ring>;
    FieldSpec::Ptr field;
    std::vector<std::string> variables;

    static Ptr make(FieldSpec::Ptr field, std::vector<std::string> variables);
    std::size_t nvars() const { return variables.size(); }
    bool same(const Ring& o) const;
    /// Index of a variable name, or npos.
    std::size_t variable_index(const std::string& name) const;
};

struct Monomial {
    std::vector<std::uint32_t> exps;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::uint32_t>(nvars, 0)}; }
    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::uint64_t total_degree() const;
    bool is_one() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    /// this / m, requires m | this.
    Monomial quotient(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& m) const { return exps == m.exps; }
    bool operator<(const Monomial& m) const { return exps < m.exps; }

    std::string to_string(const std::vector<std::string>& names) const;
};

enum class OrderKind { grevlex, lex };

/// A monomial order together with a variable precedence (a permutation
/// of the ambient variables; precedence[0] is the most significant).
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<std::uint32_t> precedence;  // empty = identity

    static MonomialOrder grevlex() { return {OrderKind::grevlex, {}}; }
    static MonomialOrder lex() { return {OrderKind::lex, {}}; }

    /// Total order refining divisibility.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    std::string name() const { return kind == OrderKind::grevlex ? "grevlex" : "lex"; }
};

struct Term {
    Monomial mono;
    FieldElement coeff;
    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Sparse exact multivariate polynomial over a FieldSpec.  Terms are
/// kept sorted descending in a fixed canonical order (grevlex with the
/// declared variable precedence), so equal polynomials have identical
/// representations and iteration is deterministic.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Ring::Ptr ring) : ring_(std::move(ring)) {}
    Polynomial(Ring::Ptr ring, std::vector<Term> terms);

    static Polynomial zero(Ring::Ptr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(Ring::Ptr ring, const FieldElement& c);
    static Polynomial variable(Ring::Ptr ring, std::size_t index);
    static Polynomial from_monomial(Ring::Ptr ring, const Monomial& m, const FieldElement& c);

    const Ring::Ptr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElement constant_coefficient() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_term(const Monomial& m, const FieldElement& c) const;

    /// f^(p^e), computed termwise: exponents scale by p^e and each
    /// coefficient maps through the coefficient-level Frobenius.
    Polynomial frobenius_power(unsigned e) const;

    /// Leading term with respect to an order (linear scan).
    const Term& leading_term(const MonomialOrder& order) const;

    std::string to_string() const;

  private:
    Ring::Ptr ring_;
    std::vector<Term> terms_;  // canonical order, descending

    void normalize(std::vector<Term>&& raw);
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

/// p^e as a checked 64-bit value.
std::uint64_t power_u64(long p, unsigned e);

}  // namespace fsig

#endif
