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

#ifndef FQGEOM_GF_HPP
#define FQGEOM_GF_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqgeom/error.hpp"

namespace fqgeom {

/// Enumeration caps. The defaults keep every exhaustive sweep at desk scale:
/// P^3 enumerations are O(q^3) objects but plane-section audits touch O(q^5)
/// incidence pairs, so the space cap is tighter than the field cap.
struct Budget {
    unsigned max_q_field = 64; // field construction and P^0..P^2 work
    unsigned max_q_space = 16; // P^3 point/plane/line enumeration
};

class FieldElement;

/// Description of F_q = F_p[t]/(f), q = p^e. The defining polynomial is the
/// lexicographically smallest monic irreducible of degree e over F_p under
/// coefficient order (c_0, c_1, ...), so serialized elements are reproducible
/// across runs and builds. For e = 1 the polynomial is t itself.
///
/// Elements are indexed 0..q-1 by their coefficient vector read in base p
/// (c_0 least significant). All arithmetic goes through tables built at
/// construction; a context must outlive every element created from it.
class FieldCtx {
  public:
    FieldCtx(unsigned p, unsigned e, const Budget& budget = Budget{});

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    unsigned q() const noexcept { return q_; }

    /// Monic degree-e defining polynomial, coefficients low-to-high
    /// (constant term first, leading 1 last).
    const std::vector<unsigned>& defining_poly() const noexcept { return defining_poly_; }

    bool same_field(const FieldCtx& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_;
    }

    FieldElement zero() const noexcept;
    FieldElement one() const noexcept;
    /// The polynomial generator t. Requires e >= 2.
    FieldElement gen() const;
    FieldElement from_index(unsigned idx) const;
    FieldElement element(std::initializer_list<unsigned> coeffs) const;

    /// Parses the element text syntax: decimal for prime-subfield values,
    /// parenthesized polynomial in t otherwise, e.g. `(t+1)`, `(2*t^1+1)`.
    FieldElement parse_element(std::string_view text) const;

    // table access for FieldElement; indices must be < q
    uint16_t tbl_add(uint16_t a, uint16_t b) const noexcept { return add_[a * q_ + b]; }
    uint16_t tbl_mul(uint16_t a, uint16_t b) const noexcept { return mul_[a * q_ + b]; }
    uint16_t tbl_neg(uint16_t a) const noexcept { return neg_[a]; }
    uint16_t tbl_inv(uint16_t a) const noexcept { return inv_[a]; }
    uint16_t tbl_frob(uint16_t a) const noexcept { return frob_[a]; }

  private:
    unsigned p_, e_, q_;
    std::vector<unsigned> defining_poly_;
    std::vector<uint16_t> add_, mul_, neg_, inv_, frob_;
};

/// An element of F_q, held as an index into its context's tables together
/// with the context pointer. Immutable value; equality is coefficient-vector
/// equality. Mixing elements of structurally different fields throws
/// errc::field_mismatch.
class FieldElement {
  public:
    FieldElement(const FieldCtx* ctx, uint16_t idx) : ctx_(ctx), v_(idx) {}

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    uint16_t index() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    /// i-th coefficient of the polynomial-basis representation, 0 <= i < e.
    unsigned coeff(unsigned i) const;

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return {ctx_, ctx_->tbl_add(v_, o.v_)};
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return {ctx_, ctx_->tbl_add(v_, ctx_->tbl_neg(o.v_))};
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return {ctx_, ctx_->tbl_mul(v_, o.v_)};
    }
    FieldElement operator-() const { return {ctx_, ctx_->tbl_neg(v_)}; }

    FieldElement inv() const {
        if (v_ == 0) raise(errc::division_by_zero, "inverse of zero");
        return {ctx_, ctx_->tbl_inv(v_)};
    }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

    FieldElement pow(unsigned long long k) const;

    bool operator==(const FieldElement& o) const {
        return v_ == o.v_ && ctx_->same_field(*o.ctx_);
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string render() const;

  private:
    void check(const FieldElement& o) const {
        if (!ctx_->same_field(*o.ctx_)) raise(errc::field_mismatch, "elements of different fields");
    }

    const FieldCtx* ctx_;
    uint16_t v_;
};

/// Constructs the canonical F_{p^e}. Deterministic across runs.
/// Errors: not_prime, degree_zero, budget_exceeded.
FieldCtx field_create(unsigned p, unsigned e, const Budget& budget = Budget{});

/// a^(p^k). frobenius(a, e) == a for every element.
FieldElement frobenius(const FieldElement& a, unsigned k);

/// The norm to the index-2 subfield: a^(sqrt(q)+1), which lands in F_sqrt(q).
/// Errors: q_not_square when e is odd.
FieldElement sqrt_q_norm(const FieldElement& a);

/// True iff the integer is p^k for a prime p and k >= 1; fills p and e.
bool prime_power_decompose(unsigned q, unsigned& p, unsigned& e);

} // namespace fqgeom

#endif // FQGEOM_GF_HPP
