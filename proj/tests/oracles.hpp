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

// Independent reference computations used only by the tests. None of these
// call into the library's expansion, bracket or normal-form code.
#ifndef MILNOR_TESTS_ORACLES_HPP
#define MILNOR_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "milnor/common.hpp"
#include "milnor/word.hpp"

namespace oracle {

using milnor::Integer;
using milnor::Multiindex;

struct SignedLetter {
    int g;
    int s;
};

// Letters of a word given as "1 2 -1 -2", without any reduction.
inline std::vector<SignedLetter> letters_of(const milnor::Word& w) {
    std::vector<SignedLetter> out;
    for (const auto& l : w.letters()) out.push_back({l.generator, l.sign});
    return out;
}

// Coefficient of X_I in the plain Magnus expansion of the (possibly
// unreduced) letter sequence, by dynamic programming over prefixes of I.
// Letter t^{+1} contributes 1 + X, letter t^{-1} contributes sum (-X)^k.
inline Integer plain_coeff(const std::vector<SignedLetter>& word, const Multiindex& index) {
    const std::size_t m = index.size();
    std::vector<Integer> dp(m + 1, 0);
    dp[0] = 1;
    for (const auto& l : word) {
        std::vector<Integer> next = dp;
        for (std::size_t j = 1; j <= m; ++j) {
            // Take a run of k >= 1 copies of X_g ending at position j.
            for (std::size_t k = 1; k <= j; ++k) {
                if (index[j - k] != l.g) break;
                if (l.s > 0 && k > 1) break;
                const int sign = (l.s > 0) ? 1 : ((k % 2) ? -1 : 1);
                next[j] += sign * dp[j - k];
            }
        }
        dp = std::move(next);
    }
    return dp[m];
}

// Coefficient of X_I for distinct-index I in the square-free expansion: the
// signed count of occurrences of I as a subsequence of the letter sequence.
inline Integer subsequence_coeff(const std::vector<SignedLetter>& word, const Multiindex& index) {
    std::vector<Integer> dp(index.size() + 1, 0);
    dp[0] = 1;
    for (const auto& l : word)
        for (std::size_t j = index.size(); j >= 1; --j)
            if (index[j - 1] == l.g) dp[j] += l.s * dp[j - 1];
    return dp[index.size()];
}

// Lyndon test by comparing against every proper rotation.
inline bool lyndon_by_rotation(const std::vector<int>& w) {
    if (w.empty()) return false;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<int> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        if (!(w < rot)) return false;
    }
    return true;
}

// Sign of the shuffle sorting the concatenation (I, J), counted by adjacent
// transpositions (bubble sort).
inline int shuffle_sign(const Multiindex& a, const Multiindex& b) {
    Multiindex v = a;
    v.insert(v.end(), b.begin(), b.end());
    int swaps = 0;
    for (std::size_t pass = 0; pass < v.size(); ++pass)
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
            if (v[k] > v[k + 1]) {
                std::swap(v[k], v[k + 1]);
                ++swaps;
            }
    return swaps % 2 ? -1 : 1;
}

// Letter string of [x, y] = x y x^-1 y^-1 expanded symbolically and then
// freely reduced with a stack.
using Letters = std::vector<std::pair<int, int>>;

inline Letters inv(const Letters& w) {
    Letters out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, -it->second});
    return out;
}

inline Letters reduce(const Letters& w) {
    Letters out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Letters comm(const Letters& x, const Letters& y) {
    Letters out = x;
    for (const auto* part : {&y}) out.insert(out.end(), part->begin(), part->end());
    const Letters xi = inv(x), yi = inv(y);
    out.insert(out.end(), xi.begin(), xi.end());
    out.insert(out.end(), yi.begin(), yi.end());
    return reduce(out);
}

inline std::string render(const Letters& w) {
    if (w.empty()) return "e";
    std::string s;
    for (const auto& [g, e] : w) {
        if (!s.empty()) s += " ";
        s += "t" + std::to_string(g) + (e < 0 ? "'" : "");
    }
    return s;
}

} // namespace oracle

#endif // MILNOR_TESTS_ORACLES_HPP
