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

#include "fqgeom/gf.hpp"

#include <algorithm>
#include <cctype>

namespace fqgeom {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// coefficient vectors over F_p, low-to-high, used only during table build
using Poly = std::vector<unsigned>;

Poly poly_mod(Poly a, const Poly& f, unsigned p) {
    const size_t e = f.size() - 1;
    for (size_t d = a.size(); d-- > e;) {
        unsigned c = a[d];
        if (c == 0) continue;
        a[d] = 0;
        for (size_t j = 0; j < e; ++j)
            a[d - e + j] = (a[d - e + j] + c * (p - f[j])) % p;
    }
    a.resize(e);
    return a;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
    // both monic; true iff g | f over F_p
    Poly r = f;
    const size_t dg = g.size() - 1;
    while (r.size() > dg) {
        unsigned c = r.back();
        size_t shift = r.size() - 1 - dg;
        if (c != 0)
            for (size_t j = 0; j < g.size(); ++j)
                r[shift + j] = (r[shift + j] + c * (p - g[j])) % p;
        r.pop_back();
    }
    return std::all_of(r.begin(), r.end(), [](unsigned x) { return x == 0; });
}

bool is_irreducible(const Poly& f, unsigned p) {
    const size_t e = f.size() - 1;
    for (size_t d = 1; 2 * d <= e; ++d) {
        unsigned long long count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long long idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            unsigned long long rem = idx;
            for (size_t i = 0; i < d; ++i) { g[i] = rem % p; rem /= p; }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// lexicographically least monic irreducible of degree e, comparing
// (c_0, c_1, ..., c_{e-1})
Poly least_irreducible(unsigned p, unsigned e) {
    unsigned long long count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        Poly f(e + 1, 0);
        unsigned long long rem = idx;
        for (unsigned i = e; i-- > 0;) { f[i] = rem % p; rem /= p; }
        f[e] = 1;
        if (is_irreducible(f, p)) return f;
    }
    raise(errc::internal, "no irreducible polynomial found");
}

} // namespace

FieldCtx::FieldCtx(unsigned p, unsigned e, const Budget& budget) : p_(p), e_(e) {
    if (!is_prime(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (e == 0) raise(errc::degree_zero, "extension degree must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > budget.max_q_field)
            raise(errc::budget_exceeded,
                  "q = p^e exceeds the field cap " + std::to_string(budget.max_q_field));
    }
    q_ = static_cast<unsigned>(q);

    if (e == 1) {
        defining_poly_ = {0, 1};
    } else {
        defining_poly_ = least_irreducible(p, e);
    }

    auto to_digits = [&](unsigned idx) {
        Poly d(e_, 0);
        for (unsigned i = 0; i < e_; ++i) { d[i] = idx % p_; idx /= p_; }
        return d;
    };
    auto to_index = [&](const Poly& d) {
        unsigned idx = 0;
        for (unsigned i = e_; i-- > 0;) idx = idx * p_ + d[i];
        return static_cast<uint16_t>(idx);
    };

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);

    for (unsigned a = 0; a < q_; ++a) {
        Poly da = to_digits(a);
        Poly na(e_);
        for (unsigned i = 0; i < e_; ++i) na[i] = (p_ - da[i]) % p_;
        neg_[a] = to_index(na);
        for (unsigned b = 0; b < q_; ++b) {
            Poly db = to_digits(b);
            Poly s(e_);
            for (unsigned i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[static_cast<size_t>(a) * q_ + b] = to_index(s);
            Poly prod(2 * e_ - 1, 0);
            for (unsigned i = 0; i < e_; ++i)
                for (unsigned j = 0; j < e_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            mul_[static_cast<size_t>(a) * q_ + b] = to_index(poly_mod(prod, defining_poly_, p_));
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[static_cast<size_t>(a) * q_ + b] == 1) { inv_[a] = static_cast<uint16_t>(b); break; }
    for (unsigned a = 0; a < q_; ++a) {
        uint16_t r = 1;
        for (unsigned i = 0; i < p_; ++i) r = mul_[static_cast<size_t>(r) * q_ + a];
        frob_[a] = r;
    }
}

FieldElement FieldCtx::zero() const noexcept { return {this, 0}; }
FieldElement FieldCtx::one() const noexcept { return {this, 1}; }

FieldElement FieldCtx::gen() const {
    if (e_ < 2) raise(errc::precondition_violated, "prime field has no polynomial generator");
    return {this, static_cast<uint16_t>(p_)};
}

FieldElement FieldCtx::from_index(unsigned idx) const {
    if (idx >= q_) raise(errc::precondition_violated, "element index out of range");
    return {this, static_cast<uint16_t>(idx)};
}

FieldElement FieldCtx::element(std::initializer_list<unsigned> coeffs) const {
    unsigned idx = 0, scale = 1, i = 0;
    for (unsigned c : coeffs) {
        if (i++ >= e_ || c >= p_) raise(errc::precondition_violated, "bad coefficient list");
        idx += c * scale;
        scale *= p_;
    }
    return {this, static_cast<uint16_t>(idx)};
}

unsigned FieldElement::coeff(unsigned i) const {
    if (i >= ctx_->e()) raise(errc::precondition_violated, "coefficient index out of range");
    unsigned v = v_;
    for (unsigned j = 0; j < i; ++j) v /= ctx_->p();
    return v % ctx_->p();
}

FieldElement FieldElement::pow(unsigned long long k) const {
    if (v_ == 0) return k == 0 ? ctx_->one() : *this;
    k %= ctx_->q() - 1;
    FieldElement result = ctx_->one();
    FieldElement base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string FieldElement::render() const {
    const unsigned p = ctx_->p(), e = ctx_->e();
    if (e == 1 || v_ < p) return std::to_string(v_ % p);
    std::string out = "(";
    bool first = true;
    for (unsigned i = e; i-- > 0;) {
        unsigned c = coeff(i);
        if (c == 0) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    out += ")";
    return out;
}

FieldElement FieldCtx::parse_element(std::string_view text) const {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_uint = [&]() -> unsigned {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            raise(errc::syntax_error, "expected digit in element '" + std::string(text) + "'");
        unsigned v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 4096) raise(errc::syntax_error, "numeric literal too large");
            ++pos;
        }
        return v;
    };

    skip_ws();
    if (pos >= text.size()) raise(errc::syntax_error, "empty element text");

    if (text[pos] != '(') {
        bool negate = false;
        if (text[pos] == '-') { negate = true; ++pos; }
        unsigned v = parse_uint();
        skip_ws();
        if (pos != text.size()) raise(errc::syntax_error, "trailing characters in element '" + std::string(text) + "'");
        FieldElement x = from_index(v % p_);
        return negate ? -x : x;
    }

    ++pos; // '('
    FieldElement acc = zero();
    bool negate = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) raise(errc::syntax_error, "unterminated element '" + std::string(text) + "'");
        // one term: [c][*][t[^k]]
        unsigned c = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = parse_uint();
            saw_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(); }
        }
        unsigned k = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            k = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                k = parse_uint();
            }
        } else if (!saw_coeff) {
            raise(errc::syntax_error, "expected term in element '" + std::string(text) + "'");
        }
        FieldElement term = from_index(c % p_);
        if (k > 0) {
            if (e_ < 2) raise(errc::syntax_error, "variable t in prime-field element");
            term = term * gen().pow(k);
        }
        acc = negate ? acc - term : acc + term;
        skip_ws();
        if (pos >= text.size()) raise(errc::syntax_error, "unterminated element '" + std::string(text) + "'");
        if (text[pos] == ')') {
            ++pos;
            skip_ws();
            if (pos != text.size())
                raise(errc::syntax_error, "trailing characters in element '" + std::string(text) + "'");
            return acc;
        }
        if (text[pos] == '+') { negate = false; ++pos; continue; }
        if (text[pos] == '-') { negate = true; ++pos; continue; }
        raise(errc::syntax_error, "unexpected character in element '" + std::string(text) + "'");
    }
}

FieldCtx field_create(unsigned p, unsigned e, const Budget& budget) {
    return FieldCtx(p, e, budget);
}

FieldElement frobenius(const FieldElement& a, unsigned k) {
    FieldElement r = a;
    k %= a.ctx().e();
    for (unsigned i = 0; i < k; ++i) r = {&a.ctx(), a.ctx().tbl_frob(r.index())};
    return r;
}

FieldElement sqrt_q_norm(const FieldElement& a) {
    const FieldCtx& F = a.ctx();
    if (F.e() % 2 != 0) raise(errc::q_not_square, "norm to F_sqrt(q) needs square q");
    return frobenius(a, F.e() / 2) * a;
}

bool prime_power_decompose(unsigned q, unsigned& p, unsigned& e) {
    if (q < 2) return false;
    for (unsigned d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            e = 0;
            unsigned n = q;
            while (n % d == 0) { n /= d; ++e; }
            return n == 1;
        }
    }
    return false;
}

} // namespace fqgeom
