/*
   Copyright 2026 The fqgeom authors

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

#ifndef FQGEOM_LINALG_HPP
#define FQGEOM_LINALG_HPP

#include <vector>

#include "fqgeom/gf.hpp"

namespace fqgeom {

/// Dense matrix over F_q, exact arithmetic, sized for the 2x4 / 4x4 work
/// this library does. Row-major storage of element indices.
class Mat {
  public:
    Mat(const FieldCtx& F, unsigned rows, unsigned cols)
        : F_(&F), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static Mat identity(const FieldCtx& F, unsigned n) {
        Mat m(F, n, n);
        for (unsigned i = 0; i < n; ++i) m.set(i, i, F.one());
        return m;
    }

    const FieldCtx& field() const noexcept { return *F_; }
    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }

    FieldElement at(unsigned i, unsigned j) const { return {F_, a_[idx(i, j)]}; }
    void set(unsigned i, unsigned j, const FieldElement& v) { a_[idx(i, j)] = v.index(); }

    Mat mul(const Mat& o) const;
    Mat transposed() const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<unsigned> rref();

    unsigned rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Basis of the right null space, one vector per row of the result,
    /// derived from the reduced row echelon form (canonical basis: one
    /// vector per free column, in ascending column order).
    std::vector<std::vector<FieldElement>> kernel_basis() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && F_->same_field(*o.F_);
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

  private:
    size_t idx(unsigned i, unsigned j) const {
        if (i >= rows_ || j >= cols_) raise(errc::precondition_violated, "matrix index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }

    const FieldCtx* F_;
    unsigned rows_, cols_;
    std::vector<uint16_t> a_;
};

} // namespace fqgeom

#endif // FQGEOM_LINALG_HPP
