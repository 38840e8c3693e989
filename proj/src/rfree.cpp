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

#include "milnor/rfree.hpp"

#include "milnor/magnus.hpp"

namespace milnor {

namespace {

void check_components(int n) {
    if (n < 2) throw DomainError("string links need at least 2 components");
}

// Deleting a strand of a 2-component string link leaves the 1-component case,
// whose reduced free group RF(0) is trivial.
void check_components_allow_one(int n) {
    if (n < 1) throw DomainError("string links need at least 1 component");
}

} // namespace

RFWord::RFWord(Word word, int components) : word_(std::move(word)), components_(components) {
    check_components_allow_one(components);
    if (word_.alphabet_size() != static_cast<std::size_t>(components - 1))
        throw DomainError("RFWord: alphabet size must be n-1 = " + std::to_string(components - 1));
}

RFWord RFWord::identity(int components) {
    check_components(components);
    return RFWord(Word(static_cast<std::size_t>(components - 1)), components);
}

RFWord RFWord::parse(std::string_view text, int components) {
    check_components(components);
    return RFWord(parse_word(text, static_cast<std::size_t>(components - 1)), components);
}

RFWord RFWord::operator*(const RFWord& other) const {
    if (components_ != other.components_) throw DomainError("RFWord: component count mismatch");
    return RFWord(concat(word_, other.word_), components_);
}

NcPoly RFWord::expansion() const {
    return magnus(word_, generator_count(), std::max(1, generator_count()), true);
}

std::vector<BasisKey> basis_pairs(int components, int k) {
    check_components(components);
    if (k < 1 || k > components - 1) throw DomainError("basis_pairs: degree out of range");
    std::vector<BasisKey> out;
    const auto perms = permutations_from_two(k);
    for (const auto& index : increasing_multiindices(components - 1, k))
        for (const auto& sigma : perms) out.emplace_back(index, sigma);
    return out;
}

Multiindex leading_monomial(const BasisKey& key) {
    const auto& [index, sigma] = key;
    Multiindex m{index.front()};
    for (int s : sigma) m.push_back(index[s - 1]);
    return m;
}

Word tau_word(const BasisKey& key, int components) {
    const auto alphabet = static_cast<std::size_t>(components - 1);
    std::vector<Word> parts;
    for (int g : leading_monomial(key)) parts.push_back(Word::generator(g, alphabet));
    return simple_commutator(parts);
}

Integer NormalForm::exponent(const BasisKey& key) const {
    auto it = exponents.find(key);
    return it == exponents.end() ? Integer(0) : it->second;
}

bool rf_equal(const RFWord& a, const RFWord& b) {
    if (a.components() != b.components()) throw DomainError("rf_equal: component count mismatch");
    return a.expansion() == b.expansion();
}

bool rf_trivial(const RFWord& w) { return w.expansion().is_one(); }

int lcs_degree(const RFWord& w) {
    const int d = w.expansion().min_positive_degree();
    return d == 0 ? w.components() : d;
}

NormalForm normal_form(const RFWord& w) {
    const int n = w.components();
    NormalForm nf;
    nf.components = n;
    NcPoly residual = w.expansion();
    for (int k = 1; k <= n - 1; ++k) {
        if (const int low = residual.min_positive_degree(); low != 0 && low < k)
            throw ConsistencyError("normal_form: residual has a degree-" + std::to_string(low) +
                                   " term at stage " + std::to_string(k));
        NcPoly lambda = NcPoly::one(residual.variable_count(), residual.truncation_degree(), true);
        for (const auto& key : basis_pairs(n, k)) {
            Integer e = residual.coeff(leading_monomial(key));
            if (e != 0) {
                RFWord tau(tau_word(key, n), n);
                lambda = lambda * tau.expansion().pow(e);
            }
            nf.exponents.emplace(key, std::move(e));
        }
        // z_{k+1} = lambda_k^{-1} z_k
        residual = lambda.inverse() * residual;
    }
    if (!residual.is_one())
        throw ConsistencyError("normal_form: residual is nontrivial after the last stage: " + residual.render());
    return nf;
}

RFWord recompose(const NormalForm& nf) {
    RFWord acc = RFWord::identity(nf.components);
    for (int k = 1; k <= nf.components - 1; ++k) {
        for (const auto& key : basis_pairs(nf.components, k)) {
            const Integer e = nf.exponent(key);
            if (e == 0) continue;
            if (!e.fits_slong_p()) throw DomainError("recompose: exponent too large to expand as a word");
            acc = acc * RFWord(tau_word(key, nf.components).pow(e.get_si()), nf.components);
        }
    }
    return acc;
}

RFWord delete_strand(const RFWord& w, int j) {
    const int n = w.components();
    if (j < 1 || j > n - 1)
        throw DomainError("delete_strand: strand " + std::to_string(j) + " out of range [1, " +
                          std::to_string(n - 1) + "]");
    const auto alphabet = static_cast<std::size_t>(n - 2);
    std::vector<Letter> out;
    for (const Letter& l : w.word().letters()) {
        if (l.generator == j) continue;
        out.push_back({l.generator > j ? l.generator - 1 : l.generator, l.sign});
    }
    return RFWord(Word::from_letters(std::move(out), alphabet), n - 1);
}

std::optional<int> brunnian_witness(const RFWord& w) {
    for (int j = 1; j <= w.components() - 1; ++j) {
        RFWord d = delete_strand(w, j);
        // RF(0) is trivial; the word is then empty by construction.
        if (d.generator_count() == 0) continue;
        if (!rf_trivial(d)) return j;
    }
    return std::nullopt;
}

bool is_brunnian(const RFWord& w) { return !brunnian_witness(w).has_value(); }

QuotientRank quotient_rank(int components, int k) {
    check_components(components);
    if (k < 1 || k > components - 1) throw DomainError("quotient_rank: need 1 <= k <= n-1");
    QuotientRank r;
    r.formula = factorial(static_cast<unsigned>(k - 1)) *
                binomial(static_cast<unsigned>(components - 1), static_cast<unsigned>(k));
    r.enumerated = static_cast<unsigned long>(basis_pairs(components, k).size());
    return r;
}

} // namespace milnor
