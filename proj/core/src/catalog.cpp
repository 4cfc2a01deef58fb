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

#include "fqgeom/catalog.hpp"

#include <cmath>

namespace fqgeom {

const char* catalog_name(CatalogId id) noexcept {
    switch (id) {
        case CatalogId::Hyperbolic: return "hyperbolic";
        case CatalogId::Hermitian: return "hermitian";
        case CatalogId::FullSpace: return "fullspace";
    }
    return "unknown";
}

std::optional<CatalogId> catalog_from_name(std::string_view name) noexcept {
    if (name == "hyperbolic") return CatalogId::Hyperbolic;
    if (name == "hermitian") return CatalogId::Hermitian;
    if (name == "fullspace") return CatalogId::FullSpace;
    return std::nullopt;
}

HomogeneousForm hyperbolic(const FieldCtx& F) {
    Expo e01{}, e23{};
    e01[0] = e01[1] = 1;
    e23[2] = e23[3] = 1;
    return HomogeneousForm::from_terms(F, 4, {{e01, F.one()}, {e23, -F.one()}});
}

HomogeneousForm hermitian(const FieldCtx& F) {
    auto root = exact_sqrt(F.q());
    if (!root) raise(errc::q_not_square, "the Hermitian surface needs square q");
    uint8_t d = static_cast<uint8_t>(*root + 1);
    std::vector<std::pair<Expo, FieldElement>> terms;
    for (unsigned i = 0; i < 4; ++i) {
        Expo e{};
        e[i] = d;
        terms.emplace_back(e, F.one());
    }
    return HomogeneousForm::from_terms(F, 4, terms);
}

HomogeneousForm full_space(const FieldCtx& F) {
    uint8_t q = static_cast<uint8_t>(F.q());
    std::vector<std::pair<Expo, FieldElement>> terms;
    auto pair = [&](unsigned i, unsigned j) {
        Expo a{}, b{};
        a[i] = 1;
        a[j] = q;
        b[i] = q;
        b[j] = 1;
        terms.emplace_back(a, F.one());
        terms.emplace_back(b, -F.one());
    };
    pair(0, 1);
    pair(2, 3);
    return HomogeneousForm::from_terms(F, 4, terms);
}

HomogeneousForm catalog_surface(CatalogId id, const FieldCtx& F) {
    switch (id) {
        case CatalogId::Hyperbolic: return hyperbolic(F);
        case CatalogId::Hermitian: return hermitian(F);
        case CatalogId::FullSpace: return full_space(F);
    }
    raise(errc::internal, "unknown catalog id");
}

unsigned catalog_degree(CatalogId id, unsigned q) {
    switch (id) {
        case CatalogId::Hyperbolic: return 2;
        case CatalogId::Hermitian: {
            auto root = exact_sqrt(q);
            if (!root) raise(errc::q_not_square, "the Hermitian surface needs square q");
            return *root + 1;
        }
        case CatalogId::FullSpace: return q + 1;
    }
    raise(errc::internal, "unknown catalog id");
}

unsigned long long elementary_bound(unsigned d, unsigned long long q) {
    return (d - 1ULL) * q * q + d * q + 1;
}

unsigned long long sziklai_bound(unsigned d, unsigned long long q) {
    return (d - 1ULL) * q + 1;
}

unsigned long long isqrt(unsigned long long n) noexcept {
    if (n == 0) return 0;
    unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(n)));
    if (r > 4294967295ull) r = 4294967295ull; // floor(sqrt(2^64 - 1))
    // division-based comparisons: r*r and (r+1)^2 can overflow near 2^32
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

std::optional<unsigned> exact_sqrt(unsigned long long q) noexcept {
    unsigned long long r = isqrt(q);
    if (r * r == q) return static_cast<unsigned>(r);
    return std::nullopt;
}

HasseWeilBound hasse_weil_bound(unsigned d, unsigned long long q) {
    double real = static_cast<double>(q) + 1.0 +
                  static_cast<double>(d - 1) * static_cast<double>(d - 2) * std::sqrt(static_cast<double>(q));
    unsigned long long k = static_cast<unsigned long long>(d - 1) * (d - 2);
    unsigned long long floor_v = q + 1 + isqrt(k * k * q);
    return {real, floor_v};
}

std::vector<unsigned> admissible_degrees(unsigned long long q) {
    std::vector<unsigned> out{2};
    if (auto r = exact_sqrt(q); r && *r + 1 != 2 && *r + 1 != q + 1) out.push_back(*r + 1);
    out.push_back(static_cast<unsigned>(q + 1));
    return out;
}

} // namespace fqgeom
