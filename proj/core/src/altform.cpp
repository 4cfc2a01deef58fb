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

#include "fqgeom/altform.hpp"

#include <algorithm>

namespace fqgeom {

namespace {

// position of (i,j), i<j, in the serialized upper triangle
unsigned upper_index(unsigned i, unsigned j) {
    static constexpr int k[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return static_cast<unsigned>(k[i][j]);
}

} // namespace

AlternatingMatrix::AlternatingMatrix(const FieldCtx& F, const std::array<FieldElement, 6>& upper) : F_(&F) {
    for (unsigned k = 0; k < 6; ++k) {
        if (!F.same_field(upper[k].ctx())) raise(errc::field_mismatch, "entry from a different field");
        u_[k] = upper[k].index();
    }
}

AlternatingMatrix AlternatingMatrix::from_matrix(const Mat& m) {
    if (m.rows() != 4 || m.cols() != 4) raise(errc::precondition_violated, "alternating matrices are 4x4");
    const FieldCtx& F = m.field();
    for (unsigned i = 0; i < 4; ++i) {
        if (!m.at(i, i).is_zero()) raise(errc::not_alternating, "nonzero diagonal entry");
        for (unsigned j = i + 1; j < 4; ++j)
            if (m.at(j, i) != -m.at(i, j)) raise(errc::not_alternating, "transpose is not the negative");
    }
    return AlternatingMatrix(
        F, {m.at(0, 1), m.at(0, 2), m.at(0, 3), m.at(1, 2), m.at(1, 3), m.at(2, 3)});
}

AlternatingMatrix AlternatingMatrix::parse(const FieldCtx& F, std::string_view text) {
    size_t open = text.find('[');
    size_t close = text.rfind(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close <= open)
        raise(errc::syntax_error, "matrix text must be bracketed, got '" + std::string(text) + "'");
    std::string_view inner = text.substr(open + 1, close - open - 1);

    std::vector<FieldElement> entries;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size() && inner[i] == '(') ++depth;
        if (i < inner.size() && inner[i] == ')') --depth;
        if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
            entries.push_back(F.parse_element(inner.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (entries.size() != 6)
        raise(errc::syntax_error, "expected 6 upper-triangle entries, got " + std::to_string(entries.size()));
    return AlternatingMatrix(F, {entries[0], entries[1], entries[2], entries[3], entries[4], entries[5]});
}

FieldElement AlternatingMatrix::at(unsigned i, unsigned j) const {
    if (i >= 4 || j >= 4) raise(errc::precondition_violated, "matrix index out of range");
    if (i == j) return F_->zero();
    FieldElement v{F_, u_[upper_index(i, j)]};
    return i < j ? v : -v;
}

bool AlternatingMatrix::is_zero() const noexcept {
    return std::all_of(u_.begin(), u_.end(), [](uint16_t x) { return x == 0; });
}

Mat AlternatingMatrix::to_matrix() const {
    Mat m(*F_, 4, 4);
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) m.set(i, j, at(i, j));
    return m;
}

std::string AlternatingMatrix::render() const {
    std::string out = "[";
    for (unsigned k = 0; k < 6; ++k) {
        if (k) out += ",";
        out += FieldElement{F_, u_[k]}.render();
    }
    out += "]";
    return out;
}

HomogeneousForm surface_from_alternating(const AlternatingMatrix& A) {
    if (A.is_zero()) raise(errc::zero_matrix, "the zero matrix defines no surface");
    const FieldCtx& F = A.ctx();
    uint8_t q = static_cast<uint8_t>(F.q());
    std::vector<std::pair<Expo, FieldElement>> terms;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i + 1; j < 4; ++j) {
            FieldElement a = A.at(i, j);
            if (a.is_zero()) continue;
            Expo low{}, high{};
            low[i] = 1;
            low[j] = q;
            high[i] = q;
            high[j] = 1;
            terms.emplace_back(low, a);
            terms.emplace_back(high, -a);
        }
    return HomogeneousForm::from_terms(F, 4, terms);
}

namespace {

FieldElement bilin(const Mat& A, const std::vector<FieldElement>& u, const std::vector<FieldElement>& w) {
    const FieldCtx& F = A.field();
    FieldElement s = F.zero();
    for (unsigned i = 0; i < 4; ++i) {
        if (u[i].is_zero()) continue;
        for (unsigned j = 0; j < 4; ++j) s = s + u[i] * A.at(i, j) * w[j];
    }
    return s;
}

} // namespace

SymplecticNormalForm symplectic_normal_form(const AlternatingMatrix& A) {
    if (A.is_zero()) raise(errc::zero_matrix, "the zero matrix has no normal form");
    const FieldCtx& F = A.ctx();
    Mat Am = A.to_matrix();

    std::vector<std::vector<FieldElement>> rest;
    for (unsigned i = 0; i < 4; ++i) {
        std::vector<FieldElement> e(4, F.zero());
        e[i] = F.one();
        rest.push_back(std::move(e));
    }

    std::vector<std::vector<FieldElement>> columns;
    while (true) {
        size_t pi = rest.size(), pj = rest.size();
        for (size_t i = 0; i < rest.size() && pi == rest.size(); ++i)
            for (size_t j = i + 1; j < rest.size(); ++j)
                if (!bilin(Am, rest[i], rest[j]).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rest.size()) break;

        std::vector<FieldElement> u = rest[pi];
        FieldElement c = bilin(Am, u, rest[pj]);
        std::vector<FieldElement> v;
        for (const auto& x : rest[pj]) v.push_back(x / c);

        rest.erase(rest.begin() + pj);
        rest.erase(rest.begin() + pi);
        for (auto& r : rest) {
            FieldElement cu = bilin(Am, u, r);
            FieldElement cv = bilin(Am, v, r);
            for (unsigned k = 0; k < 4; ++k) r[k] = r[k] + cv * u[k] - cu * v[k];
        }
        columns.push_back(std::move(u));
        columns.push_back(std::move(v));
    }
    unsigned rank = static_cast<unsigned>(columns.size());
    for (auto& r : rest) columns.push_back(std::move(r));

    Mat G(F, 4, 4);
    for (unsigned j = 0; j < 4; ++j)
        for (unsigned i = 0; i < 4; ++i) G.set(i, j, columns[j][i]);

    std::array<FieldElement, 6> upper{F.zero(), F.zero(), F.zero(), F.zero(), F.zero(), F.zero()};
    upper[0] = F.one();
    if (rank == 4) upper[5] = F.one();
    AlternatingMatrix canonical(F, upper);

    if (G.transposed().mul(Am).mul(G) != canonical.to_matrix())
        raise(errc::internal, "normal form verification failed");
    return {std::move(G), canonical, rank};
}

const char* alt_rank_class_name(AltRankClass c) noexcept {
    return c == AltRankClass::Rank2Split ? "Rank2Split" : "Rank4Extremal";
}

AltRankClass rank_classify(const AlternatingMatrix& A) {
    if (A.is_zero()) raise(errc::zero_matrix, "the zero matrix has no rank class");
    unsigned r = A.to_matrix().rank();
    if (r == 2) return AltRankClass::Rank2Split;
    if (r == 4) return AltRankClass::Rank4Extremal;
    raise(errc::internal, "alternating rank must be 0, 2, or 4");
}

bool frobenius_matrix_check(const Mat& G, unsigned subfield_degree) {
    for (unsigned i = 0; i < G.rows(); ++i)
        for (unsigned j = 0; j < G.cols(); ++j)
            if (frobenius(G.at(i, j), subfield_degree) != G.at(i, j)) return false;
    return true;
}

AlternatingMatrix alt_congruence(const AlternatingMatrix& A, const Mat& G) {
    if (G.rows() != 4 || G.cols() != 4) raise(errc::precondition_violated, "congruence needs a 4x4 matrix");
    return AlternatingMatrix::from_matrix(G.transposed().mul(A.to_matrix()).mul(G));
}

} // namespace fqgeom
