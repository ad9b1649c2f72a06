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

#include "fsig/linalg.hpp"

#include "fsig/errors.hpp"

#include <cassert>
#include <sstream>

namespace fsig {

FMatrix::FMatrix(FieldSpec::Ptr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    a_.assign(rows * cols, field_->zero());
}

FMatrix FMatrix::identity(FieldSpec::Ptr field, std::size_t n) {
    FMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field->one());
    return m;
}

bool FMatrix::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool FMatrix::operator==(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] != o.a_[i]) return false;
    }
    return true;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    FMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const FieldElement& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.set(i, j, r.at(i, j) + aik * bkj);
            }
        }
    }
    return r;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    FMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
    return r;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix diff shape mismatch");
    FMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
    return r;
}

std::vector<std::size_t> FMatrix::rref_prime() {
    // tight loop on int64 residues; p <= 31 so products stay small
    const long p = field_->characteristic();
    std::vector<long> m(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) m[i] = a_[i].prime_value();
    std::vector<long> inv(static_cast<std::size_t>(p), 0);
    for (long v = 1; v < p; ++v) inv[static_cast<std::size_t>(v)] = fp_inverse(v, p);

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m[sel * cols_ + col] == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row) {
            for (std::size_t j = col; j < cols_; ++j) {
                std::swap(m[row * cols_ + j], m[sel * cols_ + j]);
            }
        }
        long piv = m[row * cols_ + col];
        if (piv != 1) {
            long pi = inv[static_cast<std::size_t>(piv)];
            for (std::size_t j = col; j < cols_; ++j) {
                m[row * cols_ + j] = (m[row * cols_ + j] * pi) % p;
            }
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            long f = m[i * cols_ + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                long v = m[i * cols_ + j] - f * m[row * cols_ + j];
                v %= p;
                if (v < 0) v += p;
                m[i * cols_ + j] = v;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = field_->from_integer(m[i]);
    return pivots;
}

std::vector<std::size_t> FMatrix::rref_generic() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(a_[row * cols_ + j], a_[sel * cols_ + j]);
            }
        }
        FieldElement pinv = at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) {
            set(row, j, at(row, j) * pinv);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            FieldElement f = at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                set(i, j, at(i, j) - f * at(row, j));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::size_t> FMatrix::rref() {
    if (field_->kind() == FieldKind::prime) return rref_prime();
    return rref_generic();
}

std::size_t FMatrix::rank() const {
    FMatrix copy = *this;
    return copy.rref().size();
}

FMatrix FMatrix::kernel() const {
    FMatrix work = *this;
    std::vector<std::size_t> pivots = work.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::size_t nullity = cols_ - pivots.size();
    FMatrix basis(field_, nullity, cols_);
    std::size_t k = 0;
    for (std::size_t freecol = 0; freecol < cols_; ++freecol) {
        if (is_pivot[freecol]) continue;
        basis.set(k, freecol, field_->one());
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const FieldElement& v = work.at(r, freecol);
            if (!v.is_zero()) basis.set(k, pivots[r], -v);
        }
        ++k;
    }
    return row_space_canonical(basis);
}

FMatrix FMatrix::nonzero_rows() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < cols_ && zero; ++j) zero = at(i, j).is_zero();
        if (!zero) keep.push_back(i);
    }
    FMatrix r(field_, keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(keep[i], j));
    }
    return r;
}

std::string FMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

FMatrix row_space_canonical(const FMatrix& m) {
    FMatrix work = m;
    work.rref();
    return work.nonzero_rows();
}

FMatrix vstack(const FMatrix& a, const FMatrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack width mismatch");
    FMatrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(i + a.rows(), j, b.at(i, j));
    }
    return r;
}

}  // namespace fsig
