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

#include "milnor/magnus.hpp"

#include <numeric>

#include "milnor/kernels/dense_magnus.hpp"

namespace milnor {

namespace {

NcPoly magnus_sparse(const Word& w, int n, int degree, bool square_free) {
    NcPoly acc = NcPoly::one(n, degree, square_free);
    const auto& letters = w.letters();
    std::size_t pos = 0;
    while (pos < letters.size()) {
        // Free reduction leaves runs of one letter with a single sign.
        const int g = letters[pos].generator;
        long long run = 0;
        while (pos < letters.size() && letters[pos].generator == g) run += letters[pos++].sign;
        NcPoly factor = NcPoly::one(n, degree, square_free);
        Multiindex mono;
        for (int j = 1; j <= (square_free ? 1 : degree); ++j) {
            mono.push_back(g);
            Integer b;
            mpz_bin_ui(b.get_mpz_t(), Integer(static_cast<long>(run)).get_mpz_t(), static_cast<unsigned long>(j));
            factor.add_term(mono, b);
        }
        acc = acc * factor;
    }
    return acc;
}

bool magnus_dense(const Word& w, int n, int degree, bool square_free, const kernels::KernelSet& ks,
                  NcPoly& out) {
    auto layout = kernels::DenseLayout::get(n, degree, square_free);
    if (!layout) return false;
    std::vector<std::int64_t> coeffs;
    if (!kernels::dense_magnus(*layout, w, coeffs, ks)) return false;
    NcPoly p(n, degree, square_free);
    const auto& monos = layout->monomials();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) p.add_term(monos[k], Integer(static_cast<long>(coeffs[k])));
    out = std::move(p);
    return true;
}

void check_alphabet(const Word& w, int n) {
    if (n < 0 || w.alphabet_size() > static_cast<std::size_t>(n))
        throw DomainError("magnus: word alphabet exceeds variable count");
}

} // namespace

NcPoly magnus_with(const Word& w, int variable_count, int truncation_degree, bool square_free,
                   MagnusPath path, const kernels::KernelSet* ks) {
    check_alphabet(w, variable_count);
    if (truncation_degree < 1) throw DomainError("magnus: truncation degree must be >= 1");
    if (path == MagnusPath::sparse) return magnus_sparse(w, variable_count, truncation_degree, square_free);
    NcPoly out(variable_count, truncation_degree, square_free);
    const auto& kernels = ks ? *ks : kernels::active_kernels();
    if (magnus_dense(w, variable_count, truncation_degree, square_free, kernels, out)) return out;
    if (path == MagnusPath::dense) throw DomainError("magnus: dense path unavailable (layout size or overflow)");
    return magnus_sparse(w, variable_count, truncation_degree, square_free);
}

NcPoly magnus(const Word& w, int variable_count, int truncation_degree, bool square_free) {
    return magnus_with(w, variable_count, truncation_degree, square_free, MagnusPath::automatic);
}

NcPoly magnus(const Word& w, int truncation_degree, bool square_free) {
    return magnus(w, static_cast<int>(w.alphabet_size()), truncation_degree, square_free);
}

Integer mu_coeff(const NcPoly& p, const Multiindex& index) {
    if (static_cast<int>(index.size()) > p.truncation_degree())
        throw DomainError("mu_coeff: |I| = " + std::to_string(index.size()) + " exceeds truncation degree " +
                          std::to_string(p.truncation_degree()));
    return p.coeff(index);
}

Integer delta_indeterminacy(const MuTable& table, const Multiindex& index, int target) {
    Multiindex full = index;
    full.push_back(target);
    const std::size_t m = full.size();
    Integer g = 0;
    if (m > 20) throw DomainError("delta_indeterminacy: multiindex too long");
    for (std::size_t r = 0; r < m; ++r) {
        Multiindex rot(m);
        for (std::size_t s = 0; s < m; ++s) rot[s] = full[(r + s) % m];
        // Every proper subsequence (at least one index deleted), order kept.
        const unsigned long all = (1UL << m) - 1;
        for (unsigned long mask = 1; mask < all; ++mask) {
            if (__builtin_popcountl(mask) < 2) continue;
            Multiindex sub;
            for (std::size_t s = 0; s < m; ++s)
                if (mask & (1UL << s)) sub.push_back(rot[s]);
            const int j = sub.back();
            sub.pop_back();
            auto it = table.find({sub, j});
            if (it == table.end())
                throw DomainError("delta_indeterminacy: missing mu(" + join(sub) + ";" + std::to_string(j) + ")");
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), it->second.get_mpz_t());
        }
    }
    return g;
}

Integer mu_bar(const Integer& mu, const Integer& delta) {
    if (delta < 0) throw DomainError("mu_bar: negative indeterminacy");
    if (delta == 0) return mu;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), mu.get_mpz_t(), delta.get_mpz_t());
    return r;
}

} // namespace milnor
