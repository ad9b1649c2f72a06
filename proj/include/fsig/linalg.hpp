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

#ifndef FSIG_LINALG_HPP
#define FSIG_LINALG_HPP

#include "fsig/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fsig {

/// Dense matrix over a FieldSpec, row major.  Exact arithmetic; used
/// for multiplication matrices, socle kernels, echelon forms and the
/// rank computations of the structure-constant signature path.
class FMatrix {
  public:
    FMatrix() = default;
    FMatrix(FieldSpec::Ptr field, std::size_t rows, std::size_t cols);

    static FMatrix identity(FieldSpec::Ptr field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec::Ptr& field() const { return field_; }

    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FieldElement v) { a_[r * cols_ + c] = std::move(v); }

    bool is_zero() const;
    bool operator==(const FMatrix& o) const;

    FMatrix operator*(const FMatrix& o) const;
    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator-(const FMatrix& o) const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of the right kernel, canonicalized as the RREF of the
    /// standard nullspace basis; one row per kernel vector.
    FMatrix kernel() const;
    /// Rows of this matrix with zero rows dropped (post-RREF cleanup).
    FMatrix nonzero_rows() const;

    /// Deterministic textual form, e.g. [[1,0],[0,1]].
    std::string to_string() const;

  private:
    FieldSpec::Ptr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;

    std::vector<std::size_t> rref_generic();
    std::vector<std::size_t> rref_prime();
};

/// Span-canonical form of a set of row vectors: RREF with zero rows
/// dropped.  Two matrices have the same row space iff the results match.
FMatrix row_space_canonical(const FMatrix& m);

/// Stack a on top of b (same width).
FMatrix vstack(const FMatrix& a, const FMatrix& b);

}  // namespace fsig

#endif
