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

#include "milnor/common.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace milnor {

std::vector<Permutation> permutations_from_two(int k) {
    if (k < 1) throw DomainError("permutations_from_two: k must be >= 1");
    Permutation p;
    for (int v = 2; v <= k; ++v) p.push_back(v);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Multiindex> increasing_multiindices(int m, int k) {
    std::vector<Multiindex> out;
    if (k < 0 || k > m) return out;
    Multiindex cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == m - (k - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int r = pos + 1; r < k; ++r) cur[r] = cur[r - 1] + 1;
    }
    return out;
}

std::vector<Multiindex> distinct_multiindices(int m, int max_len) {
    std::vector<Multiindex> out;
    for (int len = 1; len <= std::min(m, max_len); ++len) {
        std::vector<Multiindex> level;
        for (Multiindex p : increasing_multiindices(m, len)) {
            do {
                level.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string join(const std::vector<int>& xs, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

Integer factorial(unsigned k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void check_permutation(const Permutation& sigma, int components) {
    if (components < 2) throw DomainError("need at least 2 components");
    const int expected = std::max(0, components - 2);
    if (static_cast<int>(sigma.size()) != expected)
        throw DomainError("permutation must list sigma(2..n-1): expected " + std::to_string(expected) +
                          " entries, got " + std::to_string(sigma.size()));
    Permutation sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < expected; ++i)
        if (sorted[i] != i + 2) throw DomainError("malformed permutation of {2, ..., n-1}: (" + join(sigma) + ")");
}

} // namespace milnor
