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

#include "fsig/artin.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <cassert>

namespace fsig {

ArtinAlgebra ArtinAlgebra::from_quotient(const std::vector<Polynomial>& defining,
                                         const MonomialOrder& order) {
    return from_groebner(groebner_basis(defining, order));
}

ArtinAlgebra ArtinAlgebra::from_groebner(GroebnerBasis gb) {
    ArtinAlgebra a;
    a.gb_ = std::move(gb);
    a.qb_ = quotient_basis(a.gb_);  // throws NotZeroDimensional
    if (!is_primary_to_origin(a.gb_, a.qb_)) {
        throw NotPrimaryToOrigin("quotient is zero-dimensional but not supported at the origin");
    }
    a.build();
    return a;
}

void ArtinAlgebra::build() {
    const std::size_t m = qb_.dimension();
    const Ring::Ptr& ring = gb_.ring;
    Reducer reduce(gb_);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        actions_.push_back(multiplication_matrix(gb_, qb_, v));
    }
    table_.assign(m * (m + 1) / 2, {});
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t k = 0; k <= l; ++k) {
            Monomial prod = qb_.monomials[k] * qb_.monomials[l];
            Polynomial nf = reduce(Polynomial::from_monomial(ring, prod, ring->field->one()));
            auto& row = table_[l * (l + 1) / 2 + k];
            for (const auto& t : nf.terms()) {
                row.emplace_back(static_cast<std::uint32_t>(qb_.position(t.mono)), t.coeff);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    }
}

const std::vector<std::pair<std::uint32_t, FieldElement>>& ArtinAlgebra::product_coords(
    std::size_t k, std::size_t l) const {
    if (k > l) std::swap(k, l);
    return table_[l * (l + 1) / 2 + k];
}

std::vector<FieldElement> ArtinAlgebra::multiply(const std::vector<FieldElement>& a,
                                                 const std::vector<FieldElement>& b) const {
    const std::size_t m = dimension();
    if (a.size() != m || b.size() != m) throw ShapeMismatch("coordinate length mismatch");
    std::vector<FieldElement> out(m, ring()->field->zero());
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k].is_zero()) continue;
        for (std::size_t l = 0; l < m; ++l) {
            if (b[l].is_zero()) continue;
            FieldElement factor = a[k] * b[l];
            for (const auto& [h, d] : product_coords(k, l)) {
                out[h] = out[h] + factor * d;
            }
        }
    }
    return out;
}

SocleData socle(const ArtinAlgebra& algebra) {
    const std::size_t m = algebra.dimension();
    const Ring::Ptr& ring = algebra.ring();
    // common kernel of the stacked variable actions
    FMatrix stacked(ring->field, m * ring->nvars(), m);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        const FMatrix& act = algebra.variable_action(v);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                stacked.set(v * m + i, j, act.at(i, j));
            }
        }
    }
    FMatrix kern = stacked.kernel();
    SocleData data;
    data.vectors = kern;
    for (std::size_t i = 0; i < kern.rows(); ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < m; ++j) {
            if (!kern.at(i, j).is_zero()) {
                terms.push_back(Term{algebra.basis().monomials[j], kern.at(i, j)});
            }
        }
        data.lifts.push_back(Polynomial(ring, std::move(terms)));
    }
    return data;
}

std::vector<Polynomial> ideal_from_matrix(const SocleData& socle_data, const FMatrix& m) {
    if (m.is_zero()) throw ZeroMatrix();
    if (m.cols() != socle_data.dimension()) {
        throw ShapeMismatch("matrix width must equal the socle dimension");
    }
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial g(socle_data.lifts.front().ring());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            g = g + socle_data.lifts[j].scaled(m.at(i, j));
        }
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return gens;
}

FrobeniusCoordinates frobenius_coordinates(const SocleData& socle_data,
                                           const ArtinAlgebra& big_algebra, unsigned e,
                                           int ring_dimension) {
    const std::size_t n = socle_data.dimension();
    const std::size_t m = big_algebra.dimension();
    Reducer reduce(big_algebra.groebner());
    FrobeniusCoordinates fc;
    fc.c = FMatrix(big_algebra.ring()->field, n, m);
    fc.e = e;
    fc.dim = ring_dimension;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial power = reduce(socle_data.lifts[i].frobenius_power(e));
        for (const auto& t : power.terms()) {
            fc.c.set(i, big_algebra.basis().position(t.mono), t.coeff);
        }
    }
    return fc;
}

RankSignature signature_from_rank_detailed(const FrobeniusCoordinates& coords,
                                           const ArtinAlgebra& big_algebra, const FMatrix& m,
                                           long colength_base) {
    if (m.is_zero()) throw ZeroMatrix();
    const std::size_t n = coords.c.rows();
    const std::size_t dim = big_algebra.dimension();
    if (m.cols() != n) throw ShapeMismatch("matrix width must equal the socle dimension");
    if (coords.c.cols() != dim) throw ShapeMismatch("coordinate length mismatch");
    if (static_cast<long>(n) > colength_base) {
        throw ShapeMismatch("socle dimension exceeds the base colength");
    }
    const FieldSpec::Ptr& field = big_algebra.ring()->field;
    const std::size_t rows_m = m.rows();

    // w_i = sum_j m[i][j]^(p^e) * c_j: coordinates of the i-th
    // generator's p^e-th power in the big algebra
    std::vector<std::vector<FieldElement>> w(rows_m,
                                             std::vector<FieldElement>(dim, field->zero()));
    for (std::size_t i = 0; i < rows_m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            FieldElement aq = m.at(i, j).frobenius(coords.e);
            for (std::size_t k = 0; k < dim; ++k) {
                const FieldElement& cjk = coords.c.at(j, k);
                if (!cjk.is_zero()) w[i][k] = w[i][k] + aq * cjk;
            }
        }
    }

    // column for (i, l) holds the coordinates of w_i * basis[l]
    FMatrix mprime(field, dim, dim * rows_m);
    for (std::size_t l = 0; l < dim; ++l) {
        for (std::size_t i = 0; i < rows_m; ++i) {
            std::size_t col = l * rows_m + i;
            for (std::size_t k = 0; k < dim; ++k) {
                if (w[i][k].is_zero()) continue;
                for (const auto& [h, d] : big_algebra.product_coords(k, l)) {
                    mprime.set(h, col, mprime.at(h, col) + w[i][k] * d);
                }
            }
        }
    }

    RankSignature out;
    out.rank_numerator = mprime.rank();
    out.rank_m = m.rank();
    BigInt denom = big_pow(BigInt(field->characteristic()),
                           coords.e * static_cast<unsigned>(coords.dim)) *
                   BigInt(out.rank_m);
    out.value = BigRational(BigInt(out.rank_numerator), denom);
    return out;
}

BigRational signature_from_rank(const FrobeniusCoordinates& coords,
                                const ArtinAlgebra& big_algebra, const FMatrix& m,
                                long colength_base) {
    return signature_from_rank_detailed(coords, big_algebra, m, colength_base).value;
}

BigInt count_nonzero_subspaces(std::size_t n, const BigInt& q) {
    BigInt total = 0;
    for (std::size_t r = 1; r <= n; ++r) {
        BigInt gauss = 1;
        for (std::size_t i = 0; i < r; ++i) {
            gauss *= big_pow(q, static_cast<unsigned>(n - i)) - 1;
            gauss /= big_pow(q, static_cast<unsigned>(i + 1)) - 1;
        }
        total += gauss;
    }
    return total;
}

std::vector<FMatrix> enumerate_subspaces(std::size_t n, const FieldSpec::Ptr& field,
                                         std::uint64_t budget, std::size_t max_rank) {
    if (!field->finite()) {
        throw TooManySubspaces(
            "the residue field is infinite; use rank-1 sampling for function fields");
    }
    const BigInt q(field->order());
    std::size_t top = (max_rank == 0 || max_rank > n) ? n : max_rank;
    BigInt count = 0;
    for (std::size_t r = 1; r <= top; ++r) {
        BigInt gauss = 1;
        for (std::size_t i = 0; i < r; ++i) {
            gauss *= big_pow(q, static_cast<unsigned>(n - i)) - 1;
            gauss /= big_pow(q, static_cast<unsigned>(i + 1)) - 1;
        }
        count += gauss;
    }
    if (count > budget) {
        throw TooManySubspaces("subspace count " + count.str() + " exceeds the budget " +
                               std::to_string(budget) +
                               " (try --rank1-only or a larger --budget)");
    }

    std::vector<FMatrix> out;
    const std::uint64_t qn = field->order();
    for (std::size_t r = 1; r <= top; ++r) {
        // pivot column combinations in lexicographic order
        std::vector<std::size_t> pivots(r);
        for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
        while (true) {
            // free slots: (row i, col c) with c not a pivot, c > pivots[i]
            std::vector<std::pair<std::size_t, std::size_t>> free_slots;
            std::vector<bool> is_pivot(n, false);
            for (auto c : pivots) is_pivot[c] = true;
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t c = pivots[i] + 1; c < n; ++c) {
                    if (!is_pivot[c]) free_slots.emplace_back(i, c);
                }
            }
            std::vector<std::uint64_t> odo(free_slots.size(), 0);
            while (true) {
                FMatrix m(field, r, n);
                for (std::size_t i = 0; i < r; ++i) m.set(i, pivots[i], field->one());
                for (std::size_t s = 0; s < free_slots.size(); ++s) {
                    m.set(free_slots[s].first, free_slots[s].second,
                          field->element_from_index(odo[s]));
                }
                out.push_back(std::move(m));
                // advance odometer (last slot fastest)
                std::size_t s = free_slots.size();
                while (s > 0) {
                    --s;
                    if (++odo[s] < qn) break;
                    odo[s] = 0;
                    if (s == 0) {
                        s = static_cast<std::size_t>(-1);
                        break;
                    }
                }
                if (free_slots.empty() || s == static_cast<std::size_t>(-1)) break;
            }
            // next pivot combination
            std::size_t i = r;
            while (i > 0) {
                --i;
                if (pivots[i] + (r - i) < n) {
                    ++pivots[i];
                    for (std::size_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = static_cast<std::size_t>(-1);
                    break;
                }
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }
    return out;
}

}  // namespace fsig
