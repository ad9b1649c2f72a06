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

#ifndef FSIG_ARTIN_HPP
#define FSIG_ARTIN_HPP

#include "fsig/groebner.hpp"
#include "fsig/linalg.hpp"
#include "fsig/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fsig {

/// Finite-dimensional commutative algebra presented by the standard
/// monomials of a zero-dimensional quotient.  Carries the variable
/// action matrices and the structure constants (as sparse product rows:
/// the coordinates of basis[k]*basis[l]).  The basis always starts with
/// the unit monomial.
class ArtinAlgebra {
  public:
    /// Build from defining generators; validates that the ideal is
    /// zero-dimensional and primary to the origin.
    static ArtinAlgebra from_quotient(const std::vector<Polynomial>& defining,
                                      const MonomialOrder& order);
    /// Same, starting from an already computed basis.
    static ArtinAlgebra from_groebner(GroebnerBasis gb);

    const GroebnerBasis& groebner() const { return gb_; }
    const QuotientBasis& basis() const { return qb_; }
    const Ring::Ptr& ring() const { return gb_.ring; }
    std::size_t dimension() const { return qb_.dimension(); }
    const FMatrix& variable_action(std::size_t var) const { return actions_.at(var); }

    /// Sparse coordinates of basis[k] * basis[l] (h, coefficient pairs,
    /// ascending h); symmetric in k and l.
    const std::vector<std::pair<std::uint32_t, FieldElement>>& product_coords(
        std::size_t k, std::size_t l) const;

    /// Product of two coordinate vectors through the structure
    /// constants.
    std::vector<FieldElement> multiply(const std::vector<FieldElement>& a,
                                       const std::vector<FieldElement>& b) const;

  private:
    GroebnerBasis gb_;
    QuotientBasis qb_;
    std::vector<FMatrix> actions_;
    // triangular table, index l*(l+1)/2 + k for k <= l
    std::vector<std::vector<std::pair<std::uint32_t, FieldElement>>> table_;

    void build();
};

/// Socle data of a quotient: polynomials in normal form whose residues
/// form a canonical basis of the annihilator of the maximal ideal.
struct SocleData {
    std::vector<Polynomial> lifts;
    FMatrix vectors;  // n x m, rows = coordinates of the lifts
    std::size_t dimension() const { return lifts.size(); }
};

/// Basis of the common kernel of all variable actions, canonicalized by
/// reduced row echelon form with pivots in basis order.
SocleData socle(const ArtinAlgebra& algebra);

/// Generators to adjoin to the base ideal for a matrix of socle
/// coordinates: row i yields sum_j M[i][j] * lift_j.  The resulting
/// ideal depends only on the row space of M.
std::vector<Polynomial> ideal_from_matrix(const SocleData& socle_data, const FMatrix& m);

/// Coordinates of the p^e-th powers of the socle lifts in the quotient
/// by the e-th bracket power: row i = coordinates of lift_i^(p^e).
struct FrobeniusCoordinates {
    FMatrix c;   // n x m over the coefficient field
    unsigned e;  // Frobenius level
    int dim;     // ring dimension used for normalization
};

FrobeniusCoordinates frobenius_coordinates(const SocleData& socle_data,
                                           const ArtinAlgebra& big_algebra, unsigned e,
                                           int ring_dimension);

/// The structure-constant route to the truncated signature: build the
/// m x (m*rows) matrix whose column for (generator i, basis element l)
/// holds the coordinates of (sum_j M[i][j] lift_j)^(p^e) * basis[l],
/// and return rank / (p^(e*dim) * rank M).
BigRational signature_from_rank(const FrobeniusCoordinates& coords,
                                const ArtinAlgebra& big_algebra, const FMatrix& m,
                                long colength_base);

/// Same, but also exposing the numerator rank and rank of M.
struct RankSignature {
    BigRational value;
    std::size_t rank_numerator;
    std::size_t rank_m;
};
RankSignature signature_from_rank_detailed(const FrobeniusCoordinates& coords,
                                           const ArtinAlgebra& big_algebra, const FMatrix& m,
                                           long colength_base);

/// Number of nonzero subspaces of an n-dimensional space over a field
/// with q elements (sum of Gaussian binomials).
BigInt count_nonzero_subspaces(std::size_t n, const BigInt& q);

/// Exactly one reduced row-echelon representative per nonzero subspace
/// of k^n, ordered by dimension, then pivot columns, then entries.
/// Throws TooManySubspaces when the count exceeds the budget.
/// max_rank = 0 means no restriction; max_rank = 1 enumerates only the
/// projective points (the single-element route).
std::vector<FMatrix> enumerate_subspaces(std::size_t n, const FieldSpec::Ptr& field,
                                         std::uint64_t budget, std::size_t max_rank = 0);

}  // namespace fsig

#endif
