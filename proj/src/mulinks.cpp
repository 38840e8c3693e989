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

#include "milnor/mulinks.hpp"

#include "milnor/magnus.hpp"

namespace milnor {

StringLink tau_n_sigma(int components, const Permutation& sigma) {
    check_permutation(sigma, components);
    Multiindex all(components - 1);
    for (int i = 0; i < components - 1; ++i) all[i] = i + 1;
    return StringLink(tau_word({all, sigma}, components), components);
}

namespace {

void check_distinct_index(const Multiindex& index, int components) {
    if (index.empty()) throw DomainError("closure_mu: empty multiindex");
    for (int i : index)
        if (i < 1 || i > components - 1)
            throw DomainError("closure_mu: index " + std::to_string(i) + " out of range [1, " +
                              std::to_string(components - 1) + "]");
    if (has_repeated_index(index)) throw DomainError("closure_mu: repeated index in (" + join(index) + ")");
}

} // namespace

Integer closure_mu(const StringLink& link, const Multiindex& index) {
    check_distinct_index(index, link.components());
    return mu_coeff(link.expansion(), index);
}

std::vector<std::pair<Multiindex, Integer>> closure_mu_table(const StringLink& link, int max_len) {
    std::vector<std::pair<Multiindex, Integer>> out;
    const NcPoly p = link.expansion();
    for (const auto& index : distinct_multiindices(link.generator_count(), max_len))
        out.emplace_back(index, p.coeff(index));
    return out;
}

MuVector mu_vector(const StringLink& link) {
    if (auto j = brunnian_witness(link))
        throw NotBrunnianError("mu_vector: input is not Brunnian (deleting strand " + std::to_string(*j) +
                               " leaves a nontrivial link); indeterminacy is not handled");
    const int n = link.components();
    MuVector v;
    v.components = n;
    const NcPoly p = link.expansion();
    for (const auto& sigma : permutations_from_two(n - 1)) {
        Multiindex index{1};
        index.insert(index.end(), sigma.begin(), sigma.end());
        v.entries.emplace_back(sigma, p.coeff(index));
    }
    return v;
}

bool check_product_formula(const StringLink& z1, const StringLink& z2, const Multiindex& index) {
    const Integer lhs = closure_mu(z1 * z2, index);
    Integer rhs = closure_mu(z1, index) + closure_mu(z2, index);
    for (std::size_t k = 1; k < index.size(); ++k) {
        Multiindex head(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(k));
        Multiindex tail(index.begin() + static_cast<std::ptrdiff_t>(k), index.end());
        rhs += closure_mu(z1, head) * closure_mu(z2, tail);
    }
    return lhs == rhs;
}

std::vector<Multiindex> product_formula_failures(const StringLink& z1, const StringLink& z2, int max_len) {
    if (z1.components() != z2.components()) throw DomainError("product_formula_failures: component count mismatch");
    const NcPoly p1 = z1.expansion();
    const NcPoly p2 = z2.expansion();
    const NcPoly p12 = (z1 * z2).expansion();
    std::vector<Multiindex> failures;
    for (const auto& index : distinct_multiindices(z1.generator_count(), max_len)) {
        Integer rhs = p1.coeff(index) + p2.coeff(index);
        for (std::size_t k = 1; k < index.size(); ++k) {
            Multiindex head(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(k));
            Multiindex tail(index.begin() + static_cast<std::ptrdiff_t>(k), index.end());
            rhs += p1.coeff(head) * p2.coeff(tail);
        }
        if (p12.coeff(index) != rhs) failures.push_back(index);
    }
    return failures;
}

bool conjugation_invariance(const StringLink& z, const StringLink& lambda, const Multiindex& index) {
    if (!is_brunnian(z)) throw NotBrunnianError("conjugation_invariance: z must be Brunnian");
    return closure_mu(lambda * z * lambda.inverse(), index) == closure_mu(z, index);
}

} // namespace milnor
