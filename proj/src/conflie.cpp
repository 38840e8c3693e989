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

#include "milnor/conflie.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <tuple>

#include "milnor/linalg.hpp"

namespace milnor {

namespace {

void check_label(DKLabel b, int n) {
    if (!(1 <= b.i && b.i < b.k && b.k <= n))
        throw DomainError("generator B" + std::to_string(b.k) + "," + std::to_string(b.i) + " needs 1 <= i < k <= " +
                          std::to_string(n));
}

std::string label_name(DKLabel b) { return "B" + std::to_string(b.k) + "," + std::to_string(b.i); }

std::string factor_symbol(int j) { return "B" + std::to_string(j + 1) + ","; }

// Joins rendered summands, folding a leading minus into the separator.
std::string join_signed(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k][0] == '-')
            out += " - " + parts[k].substr(1);
        else
            out += " + " + parts[k];
    }
    return out;
}

int parse_int(const std::string& s) {
    try {
        return std::stoi(s);
    } catch (const std::out_of_range&) {
        throw DomainError("index out of range: " + s);
    }
}

} // namespace

// DKElt

DKElt::DKElt(int n) : n_(n) {
    if (n < 1) throw DomainError("DKElt: need n >= 1");
    for (int j = 1; j <= n - 1; ++j) factors_.emplace_back(j);
}

DKElt DKElt::generator(DKLabel b, int n) {
    check_label(b, n);
    return from_factor(b.k - 1, LieElt::generator(b.i, b.k - 1), n);
}

DKElt DKElt::label(int a, int b, int n, LabelConvention convention) {
    if (a == b || a < 1 || b < 1 || a > n || b > n)
        throw DomainError("B" + std::to_string(a) + "," + std::to_string(b) + ": need distinct indices in [1, " +
                          std::to_string(n) + "]");
    if (a > b) return generator({a, b}, n);
    DKElt g = generator({b, a}, n);
    return convention == LabelConvention::symmetric ? g : -g;
}

DKElt DKElt::from_factor(int j, LieElt value, int n) {
    DKElt e(n);
    e.check_factor(j);
    if (value.generator_count() != j)
        throw DomainError("DKElt: factor " + std::to_string(j) + " has " + std::to_string(j) + " generators");
    e.factors_[j - 1] = std::move(value);
    return e;
}

void DKElt::check_factor(int j) const {
    if (j < 1 || j > n_ - 1)
        throw DomainError("DKElt: factor " + std::to_string(j) + " outside 1.." + std::to_string(n_ - 1));
}

const LieElt& DKElt::factor(int j) const {
    check_factor(j);
    return factors_[j - 1];
}

bool DKElt::is_zero() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const LieElt& f) { return f.is_zero(); });
}

bool DKElt::is_homogeneous(int degree) const {
    return std::all_of(factors_.begin(), factors_.end(), [&](const LieElt& f) { return f.is_homogeneous(degree); });
}

DKElt& DKElt::operator+=(const DKElt& o) {
    if (n_ != o.n_) throw DomainError("DKElt: size mismatch");
    for (std::size_t j = 0; j < factors_.size(); ++j) factors_[j] += o.factors_[j];
    return *this;
}

DKElt& DKElt::operator-=(const DKElt& o) {
    if (n_ != o.n_) throw DomainError("DKElt: size mismatch");
    for (std::size_t j = 0; j < factors_.size(); ++j) factors_[j] -= o.factors_[j];
    return *this;
}

DKElt DKElt::scaled(const Rational& c) const {
    DKElt out = *this;
    for (auto& f : out.factors_) f = f.scaled(c);
    return out;
}

std::string DKElt::render() const {
    std::vector<std::string> parts;
    for (int j = 1; j <= n_ - 1; ++j)
        if (!factors_[j - 1].is_zero()) parts.push_back(factors_[j - 1].render(factor_symbol(j)));
    return join_signed(parts);
}

DKElt parse_dk_label(std::string_view text, int n, LabelConvention convention) {
    static const std::regex re(R"(\s*B\s*(\d+)\s*,\s*(\d+)\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, re))
        throw DomainError("expected a generator B<k>,<i>, got '" + std::string(text) + "'");
    return DKElt::label(parse_int(m[1].str()), parse_int(m[2].str()), n, convention);
}

// DKAlgebra

DKAlgebra::DKAlgebra(int n) : n_(n) {
    if (n < 2) throw DomainError("DKAlgebra: need n >= 2");
}

void DKAlgebra::override_action(DKLabel actor, DKLabel target, LieElt value) {
    check_label(actor, n_);
    check_label(target, n_);
    if (actor.k >= target.k) throw DomainError("override_action: actor must lie in a lower factor");
    if (value.generator_count() != target.k - 1) throw DomainError("override_action: value in wrong factor");
    overrides_[{actor, target}] = std::move(value);
}

LieElt DKAlgebra::act_on_generator(DKLabel actor, DKLabel target) const {
    if (auto it = overrides_.find({actor, target}); it != overrides_.end()) return it->second;
    const int g = target.k - 1;
    LieElt out(g);
    if (target.i == actor.i)
        out = lie_bracket(LieElt::generator(actor.i, g), LieElt::generator(actor.k, g));
    else if (target.i == actor.k)
        out = lie_bracket(LieElt::generator(actor.k, g), LieElt::generator(actor.i, g));
    return out;
}

LieElt DKAlgebra::derive_by_generator(DKLabel actor, const LieWord& w, int q) const {
    if (w.size() == 1) return act_on_generator(actor, {q + 1, w[0]});
    auto [u, v] = standard_factorization(w);
    const LieElt pu = LieElt::basis(u, q);
    const LieElt pv = LieElt::basis(v, q);
    return lie_bracket(derive_by_generator(actor, u, q), pv) + lie_bracket(pu, derive_by_generator(actor, v, q));
}

namespace {

// ad(P_w)(y) with ad([u,v]) = ad(u) ad(v) - ad(v) ad(u).
template <class ByGenerator>
LieElt act_basis(const LieWord& w, const LieElt& y, const ByGenerator& by_generator) {
    if (w.size() == 1) return by_generator(w[0], y);
    auto [u, v] = standard_factorization(w);
    return act_basis(u, act_basis(v, y, by_generator), by_generator) -
           act_basis(v, act_basis(u, y, by_generator), by_generator);
}

} // namespace

LieElt DKAlgebra::act(const LieElt& x, int p, const LieElt& y, int q) const {
    if (!(1 <= p && p < q && q <= n_ - 1)) throw DomainError("DKAlgebra::act: need 1 <= p < q <= n-1");
    if (x.generator_count() != p || y.generator_count() != q) throw DomainError("DKAlgebra::act: factor mismatch");
    auto by_generator = [&](int letter, const LieElt& target) {
        LieElt out(q);
        for (const auto& [v, c] : target.terms())
            out += derive_by_generator({p + 1, letter}, v, q).scaled(c);
        return out;
    };
    LieElt out(q);
    for (const auto& [w, c] : x.terms()) out += act_basis(w, y, by_generator).scaled(c);
    return out;
}

DKElt DKAlgebra::bracket(const DKElt& a, const DKElt& b) const {
    if (a.n() != n_ || b.n() != n_) throw DomainError("dk_bracket: size mismatch");
    DKElt out(n_);
    for (int q = 1; q <= n_ - 1; ++q) {
        LieElt f = lie_bracket(a.factor(q), b.factor(q));
        for (int p = 1; p < q; ++p) {
            f += act(a.factor(p), p, b.factor(q), q);
            f -= act(b.factor(p), p, a.factor(q), q);
        }
        out += DKElt::from_factor(q, std::move(f), n_);
    }
    return out;
}

DKElt dk_bracket(const DKElt& a, const DKElt& b) {
    if (a.n() != b.n()) throw DomainError("dk_bracket: size mismatch");
    if (a.n() < 2) return DKElt(a.n());
    return DKAlgebra(a.n()).bracket(a, b);
}

// 4T certificate

FourTReport check_4T_report(const DKAlgebra& algebra, LabelConvention convention) {
    const int n = algebra.n();
    FourTReport report;
    report.n = n;
    auto b = [&](int a, int c) { return DKElt::label(a, c, n, convention); };
    auto record = [&](const std::string& what, const std::vector<int>& s, const DKElt& value) {
        if (!value.is_zero()) report.failures.push_back(what + " at sigma=(" + join(s) + "): " + value.render());
    };

    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    do {
        if (n >= 3) {
            record("[B_{s2,s1}, B_{s3,s1} + B_{s3,s2}]", s,
                   algebra.bracket(b(s[1], s[0]), b(s[2], s[0]) + b(s[2], s[1])));
            ++report.triangle_instances;
        }
        if (n >= 4) {
            record("[B_{s2,s1}, B_{s4,s3}]", s, algebra.bracket(b(s[1], s[0]), b(s[3], s[2])));
            ++report.disjoint_instances;
        }
    } while (std::next_permutation(s.begin(), s.end()));

    std::vector<DKLabel> gens;
    for (int k = 2; k <= n; ++k)
        for (int i = 1; i < k; ++i) gens.push_back({k, i});
    for (std::size_t x = 0; x < gens.size(); ++x)
        for (std::size_t y = x + 1; y < gens.size(); ++y)
            for (std::size_t z = y + 1; z < gens.size(); ++z) {
                const DKElt gx = DKElt::generator(gens[x], n);
                const DKElt gy = DKElt::generator(gens[y], n);
                const DKElt gz = DKElt::generator(gens[z], n);
                const DKElt j = algebra.bracket(algebra.bracket(gx, gy), gz) +
                                algebra.bracket(algebra.bracket(gy, gz), gx) +
                                algebra.bracket(algebra.bracket(gz, gx), gy);
                if (!j.is_zero())
                    report.failures.push_back("Jacobi on " + label_name(gens[x]) + ", " + label_name(gens[y]) + ", " +
                                              label_name(gens[z]) + ": " + j.render());
                ++report.jacobi_instances;
            }
    return report;
}

bool check_4T(int n) {
    if (n < 3) throw DomainError("check_4T: need n >= 3");
    return check_4T_report(DKAlgebra(n)).ok();
}

// TorusElt

TorusElt::TorusElt(int n, int torus_dim) : n_(n), torus_dim_(torus_dim) {
    if (n < 1 || torus_dim < 0) throw DomainError("TorusElt: bad dimensions");
}

TorusElt TorusElt::homogeneous(Multiindex support, DKElt value, int torus_dim) {
    TorusElt t(value.n(), torus_dim);
    t.add(support, value);
    return t;
}

DKElt TorusElt::piece(const Multiindex& support) const {
    auto it = pieces_.find(support);
    return it == pieces_.end() ? DKElt(n_) : it->second;
}

void TorusElt::add(const Multiindex& support, const DKElt& value) {
    if (value.n() != n_) throw DomainError("TorusElt: size mismatch");
    if (support.empty()) throw DomainError("TorusElt: empty support");
    for (std::size_t s = 0; s < support.size(); ++s) {
        if (support[s] < 1 || support[s] > torus_dim_) throw DomainError("TorusElt: support index out of range");
        if (s > 0 && support[s - 1] >= support[s]) throw DomainError("TorusElt: support must be increasing");
    }
    if (!value.is_homogeneous(static_cast<int>(support.size())))
        throw DomainError("TorusElt: piece on (" + join(support) + ") must be homogeneous of degree " +
                          std::to_string(support.size()));
    if (value.is_zero()) return;
    auto [it, fresh] = pieces_.try_emplace(support, value);
    if (!fresh) {
        it->second += value;
        if (it->second.is_zero()) pieces_.erase(it);
    }
}

TorusElt& TorusElt::operator+=(const TorusElt& o) {
    if (n_ != o.n_ || torus_dim_ != o.torus_dim_) throw DomainError("TorusElt: size mismatch");
    for (const auto& [s, v] : o.pieces_) add(s, v);
    return *this;
}

TorusElt TorusElt::scaled(const Rational& c) const {
    TorusElt out(n_, torus_dim_);
    for (const auto& [s, v] : pieces_) out.add(s, v.scaled(c));
    return out;
}

std::string TorusElt::render() const {
    std::vector<std::string> parts;
    for (const auto& [s, v] : pieces_) parts.push_back("(" + join(s) + "): " + v.render());
    return parts.empty() ? "0" : [&] {
        std::string out = parts[0];
        for (std::size_t k = 1; k < parts.size(); ++k) out += "; " + parts[k];
        return out;
    }();
}

TorusElt torus_generator(int k, int i, int l, int n) {
    if (l < 1 || l > n - 1) throw DomainError("torus_generator: torus index out of range");
    return TorusElt::homogeneous({l}, DKElt::generator({k, i}, n), n - 1);
}

TorusElt parse_torus_generator(std::string_view text, int n) {
    static const std::regex re(R"(\s*t\s*(\d+)\s*,\s*(\d+)\s*\(\s*(\d+)\s*\)\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, re))
        throw DomainError("expected a torus generator t<k>,<i>(<l>), got '" + std::string(text) + "'");
    return torus_generator(parse_int(m[1].str()), parse_int(m[2].str()), parse_int(m[3].str()), n);
}

int fox_exponent(const Multiindex& support_i, const Multiindex& support_j) {
    int w = 0;
    for (int i : support_i)
        for (int j : support_j)
            if (i > j) ++w;
    return w;
}

TorusElt fox_bracket(const TorusElt& u, const TorusElt& v) {
    if (u.n() != v.n() || u.torus_dim() != v.torus_dim()) throw DomainError("fox_bracket: size mismatch");
    TorusElt out(u.n(), u.torus_dim());
    for (const auto& [si, a] : u.pieces()) {
        for (const auto& [sj, b] : v.pieces()) {
            Multiindex merged;
            std::set_union(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(merged));
            if (merged.size() != si.size() + sj.size()) continue;
            const DKElt value = dk_bracket(a, b);
            out.add(merged, fox_exponent(si, sj) % 2 == 0 ? value : -value);
        }
    }
    return out;
}

// Strand deletion

DKElt psi_delete(const DKElt& a, int i) {
    const int n = a.n();
    if (n < 2) throw DomainError("psi_delete: need n >= 2");
    if (i < 1 || i > n) throw DomainError("psi_delete: strand " + std::to_string(i) + " outside [1, " +
                                          std::to_string(n) + "]");
    auto relabel = [i](int x) { return x > i ? x - 1 : x; };
    DKElt out(n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        const int k = j + 1;
        if (k == i || a.factor(j).is_zero()) continue;
        const int target = relabel(k) - 1;
        // B_{2,1} with i = 1: the whole factor dies.
        if (target < 1) continue;
        LieElt image(target);
        for (const auto& [w, c] : a.factor(j).terms()) {
            if (std::find(w.begin(), w.end(), i) != w.end()) continue;
            LieWord r;
            for (int x : w) r.push_back(relabel(x));
            image.add_term(r, c);
        }
        out += DKElt::from_factor(target, std::move(image), n - 1);
    }
    return out;
}

TorusElt psi_delete(const TorusElt& u, int i) {
    TorusElt out(u.n() - 1, u.torus_dim());
    for (const auto& [s, v] : u.pieces()) out.add(s, psi_delete(v, i));
    return out;
}

// Brunnian part of the torus model

namespace {

Multiindex full_support(int n) {
    Multiindex all(static_cast<std::size_t>(n - 1));
    std::iota(all.begin(), all.end(), 1);
    return all;
}

} // namespace

std::vector<BtfElement> btf_basis(int n) {
    if (n < 3) throw DomainError("btf_basis: need n >= 3");
    const Multiindex all = full_support(n);
    std::vector<BtfElement> out;
    for (const auto& sigma : permutations_from_two(n - 1)) {
        TorusElt t = torus_generator(n, 1, 1, n);
        for (int s : sigma) t = fox_bracket(t, torus_generator(n, s, s, n));
        const LieElt b = b_sigma(n, sigma);
        const DKElt piece = t.piece(all);
        const LieElt& top = piece.factor(n - 1);
        int sign = 0;
        if (top == b)
            sign = 1;
        else if (top == -b)
            sign = -1;
        else
            throw ConsistencyError("btf_basis: t(n, sigma) is not +-B(n, sigma) for sigma=(" + join(sigma) + ")");
        out.push_back({sigma, std::move(t), sign});
    }
    return out;
}

BtfKernelReport btf_kernel(int n) {
    if (n < 3) throw DomainError("btf_kernel: need n >= 3");
    BtfKernelReport report;
    report.n = n;

    // Domain: degree n-1 Lyndon basis of every factor.
    std::map<std::pair<int, LieWord>, int> column;
    std::vector<std::pair<int, LieWord>> domain;
    for (int j = 1; j <= n - 1; ++j)
        for (auto& w : lyndon_words(j, n - 1)) {
            column.emplace(std::make_pair(j, w), static_cast<int>(domain.size()));
            domain.emplace_back(j, std::move(w));
        }
    report.domain_dim = domain.size();

    // Stacked matrix of psi_1, ..., psi_n, stored by rows.
    std::map<std::tuple<int, int, LieWord>, linalg::SparseVec> rows;
    for (std::size_t c = 0; c < domain.size(); ++c) {
        const auto& [j, w] = domain[c];
        const DKElt x = DKElt::from_factor(j, LieElt::basis(w, j), n);
        for (int i = 1; i <= n; ++i) {
            const DKElt image = psi_delete(x, i);
            for (int t = 1; t <= n - 2; ++t)
                for (const auto& [v, coeff] : image.factor(t).terms())
                    rows[{i, t, v}][static_cast<int>(c)] = coeff;
        }
    }
    linalg::Echelon psi;
    for (auto& [key, row] : rows) psi.insert(std::move(row));
    const auto kernel = psi.nullspace(static_cast<int>(domain.size()));
    report.kernel_dim = kernel.size();

    const Multiindex all = full_support(n);
    linalg::Echelon btf;
    linalg::Echelon ker;
    for (const auto& v : kernel) ker.insert(v);
    bool inside = true;
    report.btf_in_kernel = true;
    for (const auto& e : btf_basis(n)) {
        for (int r = 1; r <= n; ++r)
            if (!psi_delete(e.element, r).is_zero()) report.btf_in_kernel = false;
        linalg::SparseVec v;
        const DKElt top = e.element.piece(all);
        for (int j = 1; j <= n - 1; ++j)
            for (const auto& [w, coeff] : top.factor(j).terms()) v[column.at({j, w})] = coeff;
        if (!ker.contains(v)) inside = false;
        btf.insert(std::move(v));
    }
    report.btf_rank = btf.rank();
    report.span_equal = inside && report.btf_rank == report.kernel_dim;
    report.pbw_determinant = linalg::determinant(pbw_delta_matrix(n));
    return report;
}

std::size_t btf_kernel_rank(int n) { return btf_kernel(n).kernel_dim; }

} // namespace milnor
