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

#ifndef MILNOR_MULINKS_HPP
#define MILNOR_MULINKS_HPP

#include <utility>
#include <vector>

#include "milnor/common.hpp"
#include "milnor/rfree.hpp"

namespace milnor {

// A string link in C(n;n), i.e. an element of RF(n-1).
using StringLink = RFWord;

// tau(n, sigma) = [tau_1, tau_sigma(2), ..., tau_sigma(n-1)].
StringLink tau_n_sigma(int components, const Permutation& sigma);

// Distinct-index Milnor invariant mu(I; n) of the closure, read from the
// longitude tau_j -> m_j. Throws DomainError on repeated or out-of-range
// indices.
Integer closure_mu(const StringLink& link, const Multiindex& index);

// All distinct-index mu(I; n) with |I| <= max_len, ordered by (length, lex).
std::vector<std::pair<Multiindex, Integer>> closure_mu_table(const StringLink& link, int max_len);

struct MuVector {
    int components = 0;
    // Every sigma in Sigma(2, ..., n-1), lexicographic.
    std::vector<std::pair<Permutation, Integer>> entries;

    friend bool operator==(const MuVector&, const MuVector&) = default;
};

// mu(1, sigma(2), ..., sigma(n-1); n) for every sigma. Throws
// NotBrunnianError for non-Brunnian input.
MuVector mu_vector(const StringLink& link);

// Compares mu(I)(z1 z2) with mu(I)(z1) + mu(I)(z2) + sum over proper
// splittings I = (J, K) of mu(J)(z1) mu(K)(z2), every term via closure_mu.
bool check_product_formula(const StringLink& z1, const StringLink& z2, const Multiindex& index);

// The product formula for every distinct I with |I| <= max_len, expanding
// each word once. Returns the indices where it fails.
std::vector<Multiindex> product_formula_failures(const StringLink& z1, const StringLink& z2, int max_len);

// closure_mu(lambda z lambda^-1, I) == closure_mu(z, I). z must be Brunnian.
bool conjugation_invariance(const StringLink& z, const StringLink& lambda, const Multiindex& index);

} // namespace milnor

#endif // MILNOR_MULINKS_HPP
