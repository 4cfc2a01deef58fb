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

#include "fqgeom/poly.hpp"

#include <algorithm>
#include <cctype>

namespace fqgeom {

namespace {

// term accumulator tolerating intermediate zero, unlike the public type
struct Accum {
    const FieldCtx* F;
    std::map<Expo, FieldElement> t;

    void add(const Expo& e, const FieldElement& c) {
        if (c.is_zero()) return;
        auto it = t.find(e);
        if (it == t.end()) {
            t.emplace(e, c);
            return;
        }
        FieldElement s = it->second + c;
        if (s.is_zero())
            t.erase(it);
        else
            it->second = s;
    }

    void add_form(const HomogeneousForm& f, const FieldElement& scale) {
        for (const auto& [e, c] : f.terms()) add(e, c * scale);
    }
};

unsigned expo_sum(const Expo& e) {
    return unsigned(e[0]) + e[1] + e[2] + e[3];
}

const char* var_name(unsigned nvars, unsigned i) {
    static const char* xs[] = {"X0", "X1", "X2", "X3"};
    static const char* uvw[] = {"U", "V", "W"};
    return nvars == 3 ? uvw[i] : xs[i];
}

} // namespace

HomogeneousForm HomogeneousForm::from_terms(const FieldCtx& F, unsigned nvars,
                                            const std::vector<std::pair<Expo, FieldElement>>& terms) {
    if (nvars != 3 && nvars != 4) raise(errc::precondition_violated, "forms have 3 or 4 variables");
    Accum acc{&F, {}};
    for (const auto& [e, c] : terms) {
        if (!F.same_field(c.ctx())) raise(errc::field_mismatch, "coefficient from a different field");
        for (unsigned i = nvars; i < 4; ++i)
            if (e[i] != 0) raise(errc::precondition_violated, "exponent on an unused variable");
        acc.add(e, c);
    }
    if (acc.t.empty()) raise(errc::zero_form, "all terms cancel");
    unsigned deg = expo_sum(acc.t.begin()->first);
    for (const auto& [e, c] : acc.t)
        if (expo_sum(e) != deg) raise(errc::not_homogeneous, "terms of unequal total degree");
    return HomogeneousForm(F, nvars, deg, std::move(acc.t));
}

FieldElement HomogeneousForm::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F_->zero() : it->second;
}

FieldElement HomogeneousForm::evaluate(const std::vector<FieldElement>& affine) const {
    if (affine.size() != nvars_) raise(errc::precondition_violated, "coordinate count != nvars");
    FieldElement s = F_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElement m = c;
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) m = m * affine[i].pow(e[i]);
        s = s + m;
    }
    return s;
}

FieldElement HomogeneousForm::evaluate(const ProjPoint& P) const {
    if (!F_->same_field(P.ctx())) raise(errc::field_mismatch, "point over a different field");
    if (P.dim() + 1 != nvars_) raise(errc::precondition_violated, "point dimension != nvars-1");
    return evaluate(P.coords());
}

HomogeneousForm HomogeneousForm::canonical_scaled() const {
    return scaled(terms_.begin()->second.inv());
}

bool HomogeneousForm::proportional_to(const HomogeneousForm& o) const {
    return nvars_ == o.nvars_ && canonical_scaled() == o.canonical_scaled();
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
    if (nvars_ != o.nvars_ || !F_->same_field(*o.F_))
        raise(errc::field_mismatch, "form arithmetic across different rings");
    Accum acc{F_, terms_};
    acc.add_form(o, F_->one());
    if (acc.t.empty()) raise(errc::zero_form, "sum is the zero form");
    unsigned deg = expo_sum(acc.t.begin()->first);
    for (const auto& [e, c] : acc.t)
        if (expo_sum(e) != deg) raise(errc::not_homogeneous, "sum is not homogeneous");
    return HomogeneousForm(*F_, nvars_, deg, std::move(acc.t));
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const {
    return *this + (-o);
}

HomogeneousForm HomogeneousForm::operator-() const {
    std::map<Expo, FieldElement> t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return HomogeneousForm(*F_, nvars_, deg_, std::move(t));
}

HomogeneousForm HomogeneousForm::scaled(const FieldElement& c) const {
    if (c.is_zero()) raise(errc::zero_form, "scaling by zero");
    std::map<Expo, FieldElement> t;
    for (const auto& [e, x] : terms_) t.emplace(e, x * c);
    return HomogeneousForm(*F_, nvars_, deg_, std::move(t));
}

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
    if (nvars_ != o.nvars_ || !F_->same_field(*o.F_))
        raise(errc::field_mismatch, "form arithmetic across different rings");
    Accum acc{F_, {}};
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e{};
            for (unsigned i = 0; i < 4; ++i) e[i] = static_cast<uint8_t>(ea[i] + eb[i]);
            acc.add(e, ca * cb);
        }
    if (acc.t.empty()) raise(errc::internal, "product of nonzero forms vanished");
    return HomogeneousForm(*F_, nvars_, deg_ + o.deg_, std::move(acc.t));
}

HomogeneousForm HomogeneousForm::pow(unsigned k) const {
    Expo zero{};
    HomogeneousForm r = from_terms(*F_, nvars_, {{zero, F_->one()}});
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool HomogeneousForm::operator==(const HomogeneousForm& o) const {
    if (nvars_ != o.nvars_ || deg_ != o.deg_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (e != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

bool HomogeneousForm::operator<(const HomogeneousForm& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    if (deg_ != o.deg_) return deg_ < o.deg_;
    auto ia = terms_.begin(), ib = o.terms_.begin();
    for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second.index() < ib->second.index();
    }
    return terms_.size() < o.terms_.size();
}

std::string HomogeneousForm::render() const {
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [e, c] = *it;
        bool constant_term = expo_sum(e) == 0;
        std::string term;
        if (!c.is_one() || constant_term) term = c.render();
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!term.empty()) term += "*";
            term += var_name(nvars_, i);
            if (e[i] > 1) term += "^" + std::to_string(e[i]);
        }
        out += term;
    }
    return out;
}

namespace {

struct FormParser {
    const FieldCtx& F;
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        raise(errc::syntax_error, what + " in form '" + std::string(s) + "'");
    }

    unsigned parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
        unsigned v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 255) fail("exponent or literal too large");
            ++pos;
        }
        return v;
    }

    // variable index, or -1 if the next token is not a variable; sets uvw
    int try_variable(bool& uvw) {
        skip_ws();
        if (pos >= s.size()) return -1;
        char c = s[pos];
        if (c == 'X' || c == 'x') {
            if (pos + 1 >= s.size() || s[pos + 1] < '0' || s[pos + 1] > '3') fail("expected X0..X3");
            pos += 2;
            uvw = false;
            return s[pos - 1] - '0';
        }
        if (c == 'U' || c == 'u') { ++pos; uvw = true; return 0; }
        if (c == 'V' || c == 'v') { ++pos; uvw = true; return 1; }
        if (c == 'W' || c == 'w') { ++pos; uvw = true; return 2; }
        return -1;
    }

    FieldElement parse_coeff() {
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            int depth = 0;
            size_t start = pos;
            while (pos < s.size()) {
                if (s[pos] == '(') ++depth;
                if (s[pos] == ')') {
                    --depth;
                    if (depth == 0) { ++pos; break; }
                }
                ++pos;
            }
            if (depth != 0) fail("unbalanced parentheses");
            return F.parse_element(s.substr(start, pos - start));
        }
        unsigned v = parse_uint();
        return F.from_index(v % F.p());
    }

    HomogeneousForm run() {
        std::vector<std::pair<Expo, FieldElement>> terms;
        bool any_uvw = false, any_x = false;
        skip_ws();
        bool negate = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            negate = s[pos] == '-';
            ++pos;
        }
        while (true) {
            // one term: factors joined by '*'
            FieldElement c = F.one();
            Expo e{};
            bool saw_factor = false;
            while (true) {
                skip_ws();
                bool uvw = false;
                int var = try_variable(uvw);
                if (var >= 0) {
                    (uvw ? any_uvw : any_x) = true;
                    unsigned k = 1;
                    skip_ws();
                    if (pos < s.size() && s[pos] == '^') { ++pos; k = parse_uint(); }
                    if (e[var] + k > 255) fail("exponent too large");
                    e[var] = static_cast<uint8_t>(e[var] + k);
                } else {
                    c = c * parse_coeff();
                }
                saw_factor = true;
                skip_ws();
                if (pos < s.size() && s[pos] == '*') { ++pos; continue; }
                break;
            }
            if (!saw_factor) fail("empty term");
            terms.emplace_back(e, negate ? -c : c);
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') { negate = false; ++pos; continue; }
            if (s[pos] == '-') { negate = true; ++pos; continue; }
            fail("unexpected character");
        }
        if (any_uvw && any_x) fail("cannot mix U,V,W with X variables");
        unsigned nvars = any_uvw ? 3 : 4;
        if (nvars == 3)
            for (auto& [e, c] : terms)
                if (e[3] != 0) fail("ternary form uses X3");
        return HomogeneousForm::from_terms(F, nvars, terms);
    }
};

} // namespace

HomogeneousForm parse_form(const FieldCtx& F, std::string_view text) {
    FormParser p{F, text};
    return p.run();
}

FieldElement evaluate(const HomogeneousForm& f, const ProjPoint& P) {
    return f.evaluate(P);
}

HomogeneousForm linear_form_from_dual(const ProjPoint& dual) {
    const FieldCtx& F = dual.ctx();
    unsigned nvars = dual.dim() + 1;
    std::vector<std::pair<Expo, FieldElement>> terms;
    for (unsigned i = 0; i < nvars; ++i) {
        if (dual.coords()[i].is_zero()) continue;
        Expo e{};
        e[i] = 1;
        terms.emplace_back(e, dual.coords()[i]);
    }
    return HomogeneousForm::from_terms(F, nvars, terms);
}

HomogeneousForm restrict_to_plane(const HomogeneousForm& f, const ProjPlane& H) {
    if (f.nvars() != 4) raise(errc::precondition_violated, "plane restriction needs a 4-variable form");
    const FieldCtx& F = f.ctx();
    if (!F.same_field(H.ctx())) raise(errc::field_mismatch, "plane over a different field");
    auto frame = plane_coordinate_frame(H);

    // X_j = frame0[j]*U + frame1[j]*V + frame2[j]*W; some of these are zero
    std::array<std::optional<HomogeneousForm>, 4> sub;
    for (unsigned j = 0; j < 4; ++j) {
        std::vector<std::pair<Expo, FieldElement>> t;
        for (unsigned k = 0; k < 3; ++k) {
            FieldElement c = frame[k].coords()[j];
            if (c.is_zero()) continue;
            Expo e{};
            e[k] = 1;
            t.emplace_back(e, c);
        }
        if (!t.empty()) sub[j] = HomogeneousForm::from_terms(F, 3, t);
    }

    Accum acc{&F, {}};
    Expo zero{};
    for (const auto& [e, c] : f.terms()) {
        bool vanished = false;
        HomogeneousForm prod = HomogeneousForm::from_terms(F, 3, {{zero, c}});
        for (unsigned j = 0; j < 4 && !vanished; ++j) {
            if (e[j] == 0) continue;
            if (!sub[j]) {
                vanished = true;
                break;
            }
            prod = prod * sub[j]->pow(e[j]);
        }
        if (!vanished) acc.add_form(prod, F.one());
    }
    if (acc.t.empty())
        raise(errc::identically_zero_on_plane, "the form vanishes identically on the plane");
    return HomogeneousForm::from_terms(F, 3, std::vector<std::pair<Expo, FieldElement>>(acc.t.begin(), acc.t.end()));
}

LinearDivision divide_by_linear(const HomogeneousForm& f, const HomogeneousForm& linear) {
    if (linear.degree() != 1) raise(errc::precondition_violated, "divisor must be linear");
    if (f.nvars() != linear.nvars() || !f.ctx().same_field(linear.ctx()))
        raise(errc::field_mismatch, "division across different rings");
    if (f.degree() < 1) return {std::nullopt, false};
    const FieldCtx& F = f.ctx();

    // leading term of the divisor in lex order
    Expo lead_e = linear.terms().rbegin()->first;
    FieldElement lead_c = linear.terms().rbegin()->second;
    unsigned j = 0;
    while (lead_e[j] == 0) ++j;

    std::map<Expo, FieldElement> rem = f.terms();
    Accum q{&F, {}};
    while (!rem.empty()) {
        auto top = rem.rbegin();
        Expo te = top->first;
        FieldElement tc = top->second;
        if (te[j] == 0) return {std::nullopt, false};
        Expo qe = te;
        qe[j] -= 1;
        FieldElement qc = tc / lead_c;
        q.add(qe, qc);
        // rem -= qc * X^qe * linear
        for (const auto& [le, lc] : linear.terms()) {
            Expo e = qe;
            for (unsigned i = 0; i < 4; ++i) e[i] = static_cast<uint8_t>(e[i] + le[i]);
            FieldElement delta = -(qc * lc);
            auto it = rem.find(e);
            if (it == rem.end()) {
                if (!delta.is_zero()) rem.emplace(e, delta);
            } else {
                FieldElement s = it->second + delta;
                if (s.is_zero())
                    rem.erase(it);
                else
                    it->second = s;
            }
        }
    }
    if (q.t.empty()) return {std::nullopt, false};
    return {HomogeneousForm::from_terms(F, f.nvars(), std::vector<std::pair<Expo, FieldElement>>(q.t.begin(), q.t.end())),
            true};
}

std::vector<HomogeneousForm> fq_linear_components(const HomogeneousForm& f, const Budget& budget) {
    if (f.degree() < 1) raise(errc::precondition_violated, "component search needs degree >= 1");
    const FieldCtx& F = f.ctx();
    std::vector<HomogeneousForm> found;
    HomogeneousForm rest = f;
    auto duals = enumerate_points(F, f.nvars() - 1, budget);
    for (const auto& D : duals) {
        if (rest.degree() < 1) break;
        HomogeneousForm ell = linear_form_from_dual(D);
        // cheap necessary condition: f vanishes at points of the divisor's zero set
        Mat dual_row(F, 1, f.nvars());
        for (unsigned i = 0; i < f.nvars(); ++i) dual_row.set(0, i, D.coords()[i]);
        auto kb = dual_row.kernel_basis();
        bool plausible = true;
        for (size_t a = 0; a < kb.size() && plausible; ++a) {
            if (!rest.evaluate(ProjPoint(F, kb[a])).is_zero()) plausible = false;
            for (size_t b = a + 1; b < kb.size() && plausible; ++b) {
                std::vector<FieldElement> sum;
                for (size_t i = 0; i < kb[a].size(); ++i) sum.push_back(kb[a][i] + kb[b][i]);
                if (!rest.evaluate(ProjPoint(F, sum)).is_zero()) plausible = false;
            }
        }
        if (!plausible) continue;
        while (rest.degree() >= 1) {
            LinearDivision d = divide_by_linear(rest, ell);
            if (!d.exact) break;
            found.push_back(ell);
            rest = *d.quotient;
        }
    }
    return found;
}

HomogeneousForm substitute_linear(const HomogeneousForm& f, const Mat& G) {
    const FieldCtx& F = f.ctx();
    if (!F.same_field(G.field())) raise(errc::field_mismatch, "matrix over a different field");
    if (G.rows() != f.nvars() || G.cols() != f.nvars())
        raise(errc::precondition_violated, "substitution matrix must be nvars x nvars");

    std::array<std::optional<HomogeneousForm>, 4> sub;
    for (unsigned i = 0; i < f.nvars(); ++i) {
        std::vector<std::pair<Expo, FieldElement>> t;
        for (unsigned j = 0; j < f.nvars(); ++j) {
            FieldElement c = G.at(i, j);
            if (c.is_zero()) continue;
            Expo e{};
            e[j] = 1;
            t.emplace_back(e, c);
        }
        if (!t.empty()) sub[i] = HomogeneousForm::from_terms(F, f.nvars(), t);
    }

    Accum acc{&F, {}};
    Expo zero{};
    for (const auto& [e, c] : f.terms()) {
        bool vanished = false;
        HomogeneousForm prod = HomogeneousForm::from_terms(F, f.nvars(), {{zero, c}});
        for (unsigned i = 0; i < f.nvars() && !vanished; ++i) {
            if (e[i] == 0) continue;
            if (!sub[i]) {
                vanished = true;
                break;
            }
            prod = prod * sub[i]->pow(e[i]);
        }
        if (!vanished) acc.add_form(prod, F.one());
    }
    if (acc.t.empty()) raise(errc::zero_form, "substitution annihilated the form");
    return HomogeneousForm::from_terms(F, f.nvars(),
                                       std::vector<std::pair<Expo, FieldElement>>(acc.t.begin(), acc.t.end()));
}

} // namespace fqgeom
