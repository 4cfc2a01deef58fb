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

#include "fqgeom/linalg.hpp"

namespace fqgeom {

Mat Mat::mul(const Mat& o) const {
    if (cols_ != o.rows_) raise(errc::precondition_violated, "matrix shape mismatch");
    Mat r(*F_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < o.cols_; ++j) {
            FieldElement s = F_->zero();
            for (unsigned k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.set(i, j, s);
        }
    return r;
}

Mat Mat::transposed() const {
    Mat r(*F_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

std::vector<unsigned> Mat::rref() {
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < cols_ && row < rows_; ++col) {
        unsigned pr = row;
        while (pr < rows_ && at(pr, col).is_zero()) ++pr;
        if (pr == rows_) continue;
        if (pr != row)
            for (unsigned j = 0; j < cols_; ++j) {
                FieldElement tmp = at(row, j);
                set(row, j, at(pr, j));
                set(pr, j, tmp);
            }
        FieldElement scale = at(row, col).inv();
        for (unsigned j = 0; j < cols_; ++j) set(row, j, at(row, j) * scale);
        for (unsigned i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            FieldElement f = at(i, col);
            for (unsigned j = 0; j < cols_; ++j) set(i, j, at(i, j) - f * at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

unsigned Mat::rank() const {
    Mat copy = *this;
    return static_cast<unsigned>(copy.rref().size());
}

std::vector<std::vector<FieldElement>> Mat::kernel_basis() const {
    Mat R = *this;
    std::vector<unsigned> pivots = R.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (unsigned c : pivots) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (unsigned f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElement> v(cols_, F_->zero());
        v[f] = F_->one();
        for (unsigned i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace fqgeom
