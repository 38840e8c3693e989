/* Copyright 2026 The Milnor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "milnor/freelie.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/linalg.hpp"

namespace milnor {

bool is_lyndon(const LieWord& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
            return false;
    return true;
}

std::pair<LieWord, LieWord> standard_factorization(const LieWord& w) {
    if (w.size() < 2 || !is_lyndon(w)) throw DomainError("standard_factorization: need a Lyndon word of length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        LieWord suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (is_lyndon(suffix)) return {LieWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), suffix};
    }
    throw ConsistencyError("standard_factorization: no Lyndon suffix");
}

std::vector<LieWord> lyndon_words(int g, int k) {
    if (g < 1 || k < 1) return {};
    std::vector<LieWord> out;
    LieWord w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == k) out.push_back(w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == g) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

// LieElt

LieElt::LieElt(int generator_count) : g_(generator_count) {
    if (generator_count < 0) throw DomainError("LieElt: negative generator count");
}

LieElt LieElt::generator(int i, int generator_count) { return basis({i}, generator_count); }

LieElt LieElt::basis(LieWord w, int generator_count, Rational coeff) {
    LieElt e(generator_count);
    e.add_term(w, coeff);
    return e;
}

void LieElt::check_word(const LieWord& w) const {
    for (int x : w)
        if (x < 1 || x > g_)
            throw DomainError("LieElt: letter " + std::to_string(x) + " outside generators 1.." + std::to_string(g_));
    if (!is_lyndon(w)) throw DomainError("LieElt: (" + join(w) + ") is not a Lyndon word");
}

Rational LieElt::coeff(const LieWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool LieElt::is_homogeneous(int k) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [k](const auto& t) { return static_cast<int>(t.first.size()) == k; });
}

void LieElt::add_term(const LieWord& w, const Rational& c) {
    if (c == 0) return;
    check_word(w);
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LieElt& LieElt::operator+=(const LieElt& other) {
    if (g_ != other.g_) throw DomainError("LieElt: generator set mismatch");
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

LieElt& LieElt::operator-=(const LieElt& other) {
    if (g_ != other.g_) throw DomainError("LieElt: generator set mismatch");
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

LieElt LieElt::operator-() const { return scaled(-1); }

LieElt LieElt::scaled(const Rational& c) const {
    LieElt out(g_);
    if (c == 0) return out;
    for (const auto& [w, x] : terms_) out.terms_.emplace(w, x * c);
    return out;
}

std::string render_lyndon(const LieWord& w, const std::string& symbol) {
    if (w.size() == 1) return symbol + std::to_string(w[0]);
    auto [u, v] = standard_factorization(w);
    return "[" + render_lyndon(u, symbol) + "," + render_lyndon(v, symbol) + "]";
}

namespace {

template <class Terms, class Spell>
std::string render_terms(const Terms& terms, Spell spell) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        if (mag != 1) os << mag.get_str() << "*";
        os << spell(w);
        first = false;
    }
    return os.str();
}

} // namespace

std::string LieElt::render(const std::string& symbol) const {
    return render_terms(terms_, [&](const LieWord& w) { return render_lyndon(w, symbol); });
}

// Bracket of Lyndon basis elements

namespace {

using Terms = LieElt::Terms;

void accumulate(Terms& acc, const LieWord& w, const Rational& c) {
    auto [it, fresh] = acc.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

LieWord concat(const LieWord& u, const LieWord& v) {
    LieWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    return uv;
}

// [P_u, P_v] in the Lyndon basis, for Lyndon u and v.
Terms bracket_basis(const LieWord& u, const LieWord& v) {
    if (u == v) return {};
    if (v < u) {
        Terms t = bracket_basis(v, u);
        for (auto& [w, c] : t) c = -c;
        return t;
    }
    thread_local std::map<std::pair<LieWord, LieWord>, Terms> memo;
    auto key = std::make_pair(u, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Terms out;
    if (u.size() == 1) {
        out.emplace(concat(u, v), 1);
    } else {
        auto [u1, u2] = standard_factorization(u);
        if (!(u2 < v)) {
            out.emplace(concat(u, v), 1);
        } else {
            // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
            for (const auto& [w, c] : bracket_basis(u2, v))
                for (const auto& [x, d] : bracket_basis(u1, w)) accumulate(out, x, c * d);
            for (const auto& [w, c] : bracket_basis(u1, v))
                for (const auto& [x, d] : bracket_basis(u2, w)) accumulate(out, x, -c * d);
        }
    }
    memo.emplace(std::move(key), out);
    return out;
}

} // namespace

LieElt lie_bracket(const LieElt& a, const LieElt& b) {
    if (a.generator_count() != b.generator_count()) throw DomainError("lie_bracket: generator set mismatch");
    LieElt out(a.generator_count());
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, d] : b.terms())
            for (const auto& [w, e] : bracket_basis(u, v)) out.add_term(w, c * d * e);
    return out;
}

LieElt left_normed(const std::vector<int>& gens, int generator_count) {
    if (gens.empty()) throw DomainError("left_normed: empty generator list");
    LieElt acc = LieElt::generator(gens[0], generator_count);
    for (std::size_t i = 1; i < gens.size(); ++i) acc = lie_bracket(acc, LieElt::generator(gens[i], generator_count));
    return acc;
}

// BracketTree

BracketTree BracketTree::leaf(int generator) {
    if (generator < 1) throw DomainError("BracketTree: generator labels are 1-based");
    return BracketTree(generator);
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
    return BracketTree(Children{std::make_shared<const BracketTree>(std::move(left)),
                                std::make_shared<const BracketTree>(std::move(right))});
}

LieElt BracketTree::evaluate(int generator_count) const {
    if (is_leaf()) return LieElt::generator(label(), generator_count);
    return lie_bracket(left().evaluate(generator_count), right().evaluate(generator_count));
}

std::string BracketTree::render(const std::string& symbol) const {
    if (is_leaf()) return symbol + std::to_string(label());
    return "[" + left().render(symbol) + "," + right().render(symbol) + "]";
}

BracketTree lyndon_tree(const LieWord& w) {
    if (w.size() == 1) return BracketTree::leaf(w[0]);
    auto [u, v] = standard_factorization(w);
    return BracketTree::node(lyndon_tree(u), lyndon_tree(v));
}

// TensorPoly

Rational TensorPoly::coeff(const LieWord& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPoly::add_term(const LieWord& m, const Rational& c) {
    for (int x : m)
        if (x < 1 || x > g_) throw DomainError("TensorPoly: letter outside generator range");
    accumulate(terms_, m, c);
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (g_ != o.g_) throw DomainError("TensorPoly: generator set mismatch");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    if (g_ != o.g_) throw DomainError("TensorPoly: generator set mismatch");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    if (a.g_ != b.g_) throw DomainError("TensorPoly: generator set mismatch");
    TensorPoly out(a.g_);
    for (const auto& [m, c] : a.terms_)
        for (const auto& [k, d] : b.terms_) accumulate(out.terms_, concat(m, k), c * d);
    return out;
}

std::string TensorPoly::render(const std::string& symbol) const {
    return render_terms(terms_, [&](const LieWord& m) {
        if (m.empty()) return std::string("1");
        std::string s;
        for (int x : m) s += symbol + std::to_string(x);
        return s;
    });
}

namespace {

const TensorPoly& uea_basis(const LieWord& w, int g) {
    thread_local std::map<std::pair<int, LieWord>, TensorPoly> memo;
    auto key = std::make_pair(g, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TensorPoly out(g);
    if (w.size() == 1) {
        out.add_term(w, 1);
    } else {
        auto [u, v] = standard_factorization(w);
        const TensorPoly iu = uea_basis(u, g);
        const TensorPoly iv = uea_basis(v, g);
        out = iu * iv - iv * iu;
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

TensorPoly uea_expand(const LieElt& a) {
    TensorPoly out(a.generator_count());
    for (const auto& [w, c] : a.terms()) {
        TensorPoly t = uea_basis(w, a.generator_count());
        for (const auto& [m, d] : t.terms()) out.add_term(m, c * d);
    }
    return out;
}

// B(n, sigma) and the rewriting routes

namespace {

Multiindex sigma_word(const Permutation& sigma) {
    Multiindex w{1};
    w.insert(w.end(), sigma.begin(), sigma.end());
    return w;
}

} // namespace

LieElt b_sigma(int n, const Permutation& sigma) {
    check_permutation(sigma, n);
    if (n == 2) return LieElt(1);
    return left_normed(sigma_word(sigma), n - 1);
}

Rational pbw_leading_coeff(int n, const Permutation& sigma, const Permutation& xi) {
    check_permutation(sigma, n);
    check_permutation(xi, n);
    if (n < 3) throw DomainError("pbw_leading_coeff: need n >= 3");
    return uea_expand(b_sigma(n, sigma)).coeff(sigma_word(xi));
}

std::vector<std::vector<Rational>> pbw_delta_matrix(int n) {
    if (n < 3) throw DomainError("pbw_delta_matrix: need n >= 3");
    const auto perms = permutations_from_two(n - 1);
    std::vector<std::vector<Rational>> m;
    for (const auto& sigma : perms) {
        const TensorPoly e = uea_expand(b_sigma(n, sigma));
        std::vector<Rational> row;
        for (const auto& xi : perms) row.push_back(e.coeff(sigma_word(xi)));
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

void check_multilinear(const LieElt& a, int n) {
    if (n < 3) throw DomainError("rewrite_to_basis: need n >= 3");
    if (a.generator_count() != n - 1)
        throw DomainError("rewrite_to_basis: element must live on n-1 = " + std::to_string(n - 1) + " generators");
    for (const auto& [w, c] : a.terms()) {
        LieWord sorted = w;
        std::sort(sorted.begin(), sorted.end());
        bool ok = static_cast<int>(w.size()) == n - 1;
        for (int i = 0; ok && i < n - 1; ++i) ok = sorted[i] == i + 1;
        if (!ok) throw DomainError("rewrite_to_basis: term " + render_lyndon(w) + " is not multilinear");
    }
}

// Linear combination of left-normed brackets [[...[w1,w2],...],wm].
using LnSum = std::map<LieWord, Rational>;

void ln_add(LnSum& acc, const LieWord& w, const Rational& c) {
    auto [it, fresh] = acc.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

LnSum append(const LnSum& s, const LieWord& tail) {
    LnSum out;
    for (const auto& [w, c] : s) ln_add(out, concat(w, tail), c);
    return out;
}

// [P, Q] with P and Q left-normed, as left-normed brackets.
LnSum ln_bracket(const LieWord& p, const LieWord& q) {
    if (q.size() == 1) return {{concat(p, q), 1}};
    // [P, [Q', d]] = [[P, Q'], d] - [[P, d], Q']
    const LieWord q1(q.begin(), q.end() - 1);
    const int d = q.back();
    LnSum out = append(ln_bracket(p, q1), {d});
    for (const auto& [w, c] : ln_bracket(concat(p, {d}), q1)) ln_add(out, w, -c);
    return out;
}

LnSum to_left_normed(const BracketTree& t) {
    if (t.is_leaf()) return {{{t.label()}, 1}};
    const LnSum l = to_left_normed(t.left());
    const LnSum r = to_left_normed(t.right());
    LnSum out;
    for (const auto& [p, c] : l)
        for (const auto& [q, d] : r)
            for (const auto& [w, e] : ln_bracket(p, q)) ln_add(out, w, c * d * e);
    return out;
}

// Rewrites a left-normed bracket so that letter x comes first.
LnSum front(const LieWord& w, int x) {
    const auto pos = static_cast<std::size_t>(std::find(w.begin(), w.end(), x) - w.begin());
    if (pos == w.size()) throw ConsistencyError("rewrite_jacobi: letter missing from bracket");
    if (pos == 0) return {{w, 1}};
    const LieWord rest(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
    if (pos == 1) {
        LieWord swapped{x, w[0]};
        return {{concat(swapped, rest), -1}};
    }
    // [[A, c], x] = [[A, x], c] + [[x, c], A]
    const LieWord a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos) - 1);
    const int c = w[pos - 1];
    LnSum out;
    LieWord ax = concat(a, {x});
    LieWord tail = concat({c}, rest);
    for (const auto& [v, k] : front(ax, x)) ln_add(out, concat(v, tail), k);
    for (const auto& [v, k] : ln_bracket({x, c}, a)) ln_add(out, concat(v, rest), k);
    return out;
}

SigmaCoeffs zero_coeffs(int n) {
    SigmaCoeffs out;
    for (const auto& sigma : permutations_from_two(n - 1)) out.emplace(sigma, 0);
    return out;
}

} // namespace

SigmaCoeffs rewrite_jacobi(const LieElt& a, int n) {
    check_multilinear(a, n);
    SigmaCoeffs out = zero_coeffs(n);
    for (const auto& [w, c] : a.terms()) {
        for (const auto& [ln, d] : to_left_normed(lyndon_tree(w))) {
            for (const auto& [v, e] : front(ln, 1)) {
                if (v.front() != 1) throw ConsistencyError("rewrite_jacobi: x1 not moved to the front");
                Permutation sigma(v.begin() + 1, v.end());
                auto it = out.find(sigma);
                if (it == out.end()) throw ConsistencyError("rewrite_jacobi: bracket is not multilinear");
                it->second += c * d * e;
            }
        }
    }
    return out;
}

SigmaCoeffs rewrite_linear_solve(const LieElt& a, int n) {
    check_multilinear(a, n);
    const auto perms = permutations_from_two(n - 1);
    std::vector<LieElt> columns;
    std::map<LieWord, std::size_t> row_of;
    auto index_rows = [&](const LieElt& e) {
        for (const auto& [w, c] : e.terms()) row_of.try_emplace(w, row_of.size());
    };
    for (const auto& sigma : perms) {
        columns.push_back(b_sigma(n, sigma));
        index_rows(columns.back());
    }
    index_rows(a);
    linalg::DenseMatrix m(row_of.size(), std::vector<Rational>(perms.size()));
    std::vector<Rational> rhs(row_of.size());
    for (std::size_t j = 0; j < perms.size(); ++j)
        for (const auto& [w, c] : columns[j].terms()) m[row_of.at(w)][j] = c;
    for (const auto& [w, c] : a.terms()) rhs[row_of.at(w)] = c;
    auto x = linalg::solve(std::move(m), std::move(rhs));
    if (!x) throw ConsistencyError("rewrite_linear_solve: element outside the span of the B(n, sigma)");
    SigmaCoeffs out;
    for (std::size_t j = 0; j < perms.size(); ++j) out.emplace(perms[j], (*x)[j]);
    return out;
}

SigmaCoeffs rewrite_to_basis(const LieElt& a, int n) {
    SigmaCoeffs jacobi = rewrite_jacobi(a, n);
    SigmaCoeffs solved = rewrite_linear_solve(a, n);
    if (jacobi != solved) throw ConsistencyError("rewrite_to_basis: Jacobi recursion and linear solve disagree");
    return jacobi;
}

long multilinear_dim(int n) {
    if (n < 3) throw DomainError("multilinear_dim: need n >= 3");
    long count = 0;
    for (const auto& w : lyndon_words(n - 1, n - 1)) {
        LieWord sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) ++count;
    }
    return count;
}

} // namespace milnor
