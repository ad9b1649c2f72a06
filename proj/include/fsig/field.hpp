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

#ifndef FSIG_FIELD_HPP
#define FSIG_FIELD_HPP

#include "fsig/fppoly.hpp"
#include "fsig/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace fsig {

enum class FieldKind { prime, extension, function };

/// Guards on field construction.  Everything downstream enumerates
/// objects whose count scales with powers of the field order, so the
/// defaults keep runs at desk scale.
struct FieldLimits {
    long max_characteristic = 31;
    long max_extension_degree = 8;
};

class FieldElement;

/// Immutable description of a coefficient field: a prime field F_p, an
/// extension F_(p^m) presented by an irreducible modulus, or a rational
/// function field F_p(t_1,...,t_s).  Shared by pointer; all elements
/// keep a reference to their spec.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    using Ptr = std::shared_ptr<const FieldSpec>;

    static Ptr make_prime(long p, const FieldLimits& limits = {});
    /// modulus: coefficients c_0..c_m of a monic irreducible polynomial
    /// over F_p in the generator symbol (c_m must be 1).  Irreducibility
    /// is verified by trial division up to degree m/2.
    static Ptr make_extension(long p, std::vector<long> modulus,
                              std::string generator_name = "w",
                              const FieldLimits& limits = {});
    static Ptr make_function(long p, std::vector<std::string> transcendentals,
                             const FieldLimits& limits = {});

    FieldKind kind() const { return kind_; }
    long characteristic() const { return p_; }
    /// m for extension fields, 1 otherwise.
    long extension_degree() const { return degree_; }
    bool finite() const { return kind_ != FieldKind::function; }
    /// Number of elements (finite kinds only).
    std::uint64_t order() const;
    const std::vector<long>& modulus() const { return modulus_; }
    const std::string& generator_name() const { return generator_name_; }
    const std::vector<std::string>& transcendentals() const { return transcendentals_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long n) const;
    /// The extension generator w (extension kind only).
    FieldElement generator() const;
    /// The i-th transcendental (function kind only).
    FieldElement transcendental(std::size_t i) const;
    /// Canonical indexing of the elements of a finite field, 0 = zero.
    FieldElement element_from_index(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;

    bool same(const FieldSpec& other) const;
    std::string to_string() const;

  private:
    FieldSpec() = default;
    FieldKind kind_ = FieldKind::prime;
    long p_ = 2;
    long degree_ = 1;
    std::vector<long> modulus_;  // extension kind: c_0..c_m, monic
    std::string generator_name_;
    std::vector<std::string> transcendentals_;
};

/// A reduced fraction of F_p-polynomials in the transcendentals.  The
/// denominator is monic in the canonical (lex) sense and coprime to the
/// numerator, so representations are canonical and equality is cheap.
struct FieldFraction {
    FpPoly num;
    FpPoly den;
    bool operator==(const FieldFraction& o) const { return num == o.num && den == o.den; }
    bool operator<(const FieldFraction& o) const {
        if (num != o.num) return num < o.num;
        return den < o.den;
    }
};

/// Immutable value in a FieldSpec.  Prime kind stores the residue,
/// extension kind the coefficient vector over F_p, function kind a
/// reduced fraction.
class FieldElement {
  public:
    FieldElement() = default;

    const FieldSpec::Ptr& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Arbitrary total order on canonical representations (for
    /// deterministic containers); not a field-theoretic order.
    bool operator<(const FieldElement& o) const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t n) const;
    /// a^(p^e) by e-fold application of the p-power map.
    FieldElement frobenius(unsigned e) const;
    /// The unique b with b^p = a, when it exists.  Always exists for
    /// finite kinds; for function fields exactly when all exponents of
    /// the reduced fraction are divisible by p.
    FieldElement pth_root() const;

    long prime_value() const { return std::get<long>(value_); }
    const std::vector<long>& extension_coeffs() const {
        return std::get<std::vector<long>>(value_);
    }
    const FieldFraction& fraction() const { return std::get<FieldFraction>(value_); }

    std::string to_string() const;
    /// True when to_string needs parentheses inside a product.
    bool needs_parens_in_product() const;

  private:
    friend class FieldSpec;
    friend FieldElement make_function_element(const FieldSpec::Ptr&, FpPoly, FpPoly);
    FieldSpec::Ptr spec_;
    std::variant<long, std::vector<long>, FieldFraction> value_;

    FieldElement(FieldSpec::Ptr spec, long v) : spec_(std::move(spec)), value_(v) {}
    FieldElement(FieldSpec::Ptr spec, std::vector<long> v)
        : spec_(std::move(spec)), value_(std::move(v)) {}
    FieldElement(FieldSpec::Ptr spec, FieldFraction v)
        : spec_(std::move(spec)), value_(std::move(v)) {}
};

/// Build a function-field element from a numerator/denominator pair;
/// reduces to canonical form.
FieldElement make_function_element(const FieldSpec::Ptr& spec, FpPoly num, FpPoly den);

bool is_prime_number(long n);

}  // namespace fsig

#endif
