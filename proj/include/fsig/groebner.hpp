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

#ifndef FSIG_GROEBNER_HPP
#define FSIG_GROEBNER_HPP

#include "fsig/linalg.hpp"
#include "fsig/poly.hpp"

#include <map>
#include <vector>

namespace fsig {

/// Reduced Groebner basis: monic generators, no leading monomial
/// divides another, every generator fully reduced against the rest,
/// sorted by leading monomial.  Unique for (ideal, order).
struct GroebnerBasis {
    Ring::Ptr ring;
    MonomialOrder order;
    std::vector<Polynomial> generators;
    std::vector<Monomial> leading;  // aligned with generators

    bool contains_unit() const;
};

/// Standard monomials of a zero-dimensional quotient, ascending in the
/// active order (so monomials[0] == 1 whenever the quotient is nonzero),
/// with an index for coordinate extraction.
struct QuotientBasis {
    std::vector<Monomial> monomials;
    std::map<std::vector<std::uint32_t>, std::size_t> index;

    std::size_t dimension() const { return monomials.size(); }
    std::size_t position(const Monomial& m) const;
};

/// Buchberger's algorithm with the normal selection strategy and both
/// classical criteria; deterministic for a given input sequence.
/// Zero polynomials are filtered; an all-zero input yields the empty
/// basis of the zero ideal.
GroebnerBasis groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order);

/// The unique fully reduced remainder; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Reusable normal-form engine: keeps the basis pre-sorted in the
/// active order so repeated reductions skip the per-call setup.
class Reducer {
  public:
    Reducer() = default;
    explicit Reducer(const GroebnerBasis& gb);
    Polynomial operator()(const Polynomial& f) const;

  private:
    Ring::Ptr ring_;
    MonomialOrder order_;
    std::vector<std::vector<Term>> basis_;
    std::vector<Monomial> leading_;
};

/// Standard monomials; throws NotZeroDimensional when some variable has
/// no pure power in the leading-term ideal.
QuotientBasis quotient_basis(const GroebnerBasis& gb);

/// Coordinates of a polynomial already in normal form.
std::vector<FieldElement> coordinates(const Polynomial& nf_poly, const QuotientBasis& qb);

/// Matrix of multiplication by the given variable on the quotient;
/// column j holds the coordinates of normal_form(x_var * monomials[j]).
FMatrix multiplication_matrix(const GroebnerBasis& gb, const QuotientBasis& qb, std::size_t var);

/// True iff every variable is nilpotent on the quotient, i.e. the only
/// point of the vanishing locus is the origin.  Nilpotence is decided
/// by repeated p-th powers reduced in the quotient, up to the
/// vector-space dimension.
bool is_primary_to_origin(const GroebnerBasis& gb);
bool is_primary_to_origin(const GroebnerBasis& gb, const QuotientBasis& qb);

/// Dimension of the quotient ring: the maximum size of a variable
/// subset U such that no leading monomial involves only variables of U.
int krull_dimension(const GroebnerBasis& gb);

}  // namespace fsig

#endif
