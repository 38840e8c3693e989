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

#ifndef MILNOR_RFREE_HPP
#define MILNOR_RFREE_HPP

#include <map>
#include <optional>
#include <utility>

#include "milnor/common.hpp"
#include "milnor/ncpoly.hpp"
#include "milnor/word.hpp"

namespace milnor {

// Element of the reduced free group RF(n-1) on tau_1, ..., tau_{n-1}, viewed as
// a string link in C(n;n) with n components.
class RFWord {
  public:
    RFWord(Word word, int components);
    static RFWord identity(int components);
    static RFWord parse(std::string_view text, int components);

    const Word& word() const { return word_; }
    int components() const { return components_; }
    int generator_count() const { return components_ - 1; }

    RFWord operator*(const RFWord& other) const;
    RFWord inverse() const { return RFWord(word_.inverse(), components_); }

    // Square-free Magnus expansion truncated at degree n-1.
    NcPoly expansion() const;

  private:
    Word word_;
    int components_;
};

// Key (I, sigma) of the normal form: I strictly increasing, sigma a
// permutation of {2, ..., |I|}.
using BasisKey = std::pair<Multiindex, Permutation>;

// The canonical basis pairs (I, sigma) of RF(n-1)_k / RF(n-1)_{k+1}, lex in I
// then in sigma's one-line notation.
std::vector<BasisKey> basis_pairs(int components, int k);

// tau(I, sigma) = [tau_{i_1}, tau_{i_sigma(2)}, ..., tau_{i_sigma(k)}].
Word tau_word(const BasisKey& key, int components);

// Leading monomial X_{i_1} X_{i_sigma(2)} ... X_{i_sigma(k)} of tau(I, sigma).
Multiindex leading_monomial(const BasisKey& key);

struct NormalForm {
    int components = 0;
    // Every basis pair of every degree 1..n-1, zeros included.
    std::map<BasisKey, Integer> exponents;

    Integer exponent(const BasisKey& key) const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

bool rf_equal(const RFWord& a, const RFWord& b);
bool rf_trivial(const RFWord& w);

// Minimal degree with a nonzero square-free term; n when w is trivial.
int lcs_degree(const RFWord& w);

// Degree-peeling normal form. Throws ConsistencyError if the residual is not
// trivial after the last stage.
NormalForm normal_form(const RFWord& w);

// Product over degrees, then I, then sigma, of tau(I, sigma)^e(I, sigma).
RFWord recompose(const NormalForm& nf);

// delta_j: tau_j -> 1, tau_i -> tau_i (i < j), tau_i -> tau_{i-1} (i > j).
RFWord delete_strand(const RFWord& w, int j);

bool is_brunnian(const RFWord& w);
// First strand j in 1..n-1 whose deletion leaves a nontrivial word.
std::optional<int> brunnian_witness(const RFWord& w);

struct QuotientRank {
    Integer formula;    // (k-1)! * binom(n-1, k)
    Integer enumerated; // number of basis pairs (I, sigma) with |I| = k
};
QuotientRank quotient_rank(int components, int k);

} // namespace milnor

#endif // MILNOR_RFREE_HPP
