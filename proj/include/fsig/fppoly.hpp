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

#ifndef FSIG_FPPOLY_HPP
#define FSIG_FPPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fsig {

/// Sparse multivariate polynomial over a prime field F_p.  This is the
/// coefficient workhorse of rational function fields: numerators and
/// denominators of fractions live here, together with the recursive
/// content-free gcd that keeps fractions reduced.
///
/// Terms are keyed by exponent vectors of a fixed length (the number of
/// transcendentals); std::map keeps iteration deterministic.  The zero
/// polynomial has an empty term map.
class FpPoly {
  public:
    using Exponents = std::vector<std::uint32_t>;

    FpPoly() : p_(2), nvars_(0) {}
    FpPoly(long p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static FpPoly constant(long p, std::size_t nvars, long value);
    /// The monomial c * t_index^power.
    static FpPoly monomial(long p, std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1, long coeff = 1);

    long characteristic() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    /// Constant term as a residue in [0, p).
    long constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;

    const std::map<Exponents, long>& terms() const { return terms_; }

    void add_term(const Exponents& e, long coeff);

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator-() const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }
    bool operator<(const FpPoly& o) const { return terms_ < o.terms_; }

    FpPoly scaled(long c) const;

    /// Exact quotient; the caller guarantees divisibility.
    FpPoly div_exact(const FpPoly& divisor) const;

    /// Raise every exponent of variable `index` by the factor `k`
    /// (substitution t -> u^k).  Coefficients are untouched.
    FpPoly scale_exponents(std::size_t index, std::uint32_t k) const;
    /// Scale all exponent vectors by k (used for p^e-th powers: in
    /// characteristic p, f^(p^e) is the termwise exponent scaling).
    FpPoly scale_all_exponents(std::uint32_t k) const;
    /// Divide every exponent by k; requires divisibility (p-th roots).
    bool try_unscale_all_exponents(std::uint32_t k, FpPoly& out) const;

    /// Rename/permute variables into a new ambient list: new_index[i] is
    /// the position of old variable i in the target polynomial ring.
    FpPoly remap_variables(std::size_t new_nvars,
                           const std::vector<std::size_t>& new_index) const;

    /// Leading term with respect to lex on the exponent vectors (the
    /// canonical order used for fraction normalization).
    const Exponents& leading_exponents() const;
    long leading_coefficient() const;

    static FpPoly gcd(const FpPoly& a, const FpPoly& b);

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    long p_;
    std::size_t nvars_;
    std::map<Exponents, long> terms_;

    long normalize_residue(long v) const;
};

/// Modular inverse in F_p, p prime.
long fp_inverse(long value, long p);

}  // namespace fsig

#endif
