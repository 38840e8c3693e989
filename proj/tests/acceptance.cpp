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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "milnor/conflie.hpp"
#include "milnor/freelie.hpp"
#include "milnor/kappa.hpp"
#include "milnor/mulinks.hpp"
#include "milnor/random.hpp"
#include "milnor/rfree.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

Integer oracle_mu(const StringLink& z, const Multiindex& index) {
    return oracle::subsequence_coeff(oracle::letters_of(z.word()), index);
}

// Every distinct-index invariant of length < n-1 vanishes.
bool oracle_brunnian(const StringLink& z) {
    for (const auto& index : distinct_multiindices(z.generator_count(), z.components() - 2))
        if (oracle_mu(z, index) != 0) return false;
    return true;
}

bool kronecker() {
    for (int n = 3; n <= 6; ++n) {
        const auto perms = permutations_from_two(n - 1);
        for (const auto& sigma : perms) {
            const StringLink z = tau_n_sigma(n, sigma);
            for (const auto& xi : perms) {
                Multiindex index{1};
                index.insert(index.end(), xi.begin(), xi.end());
                const int expected = xi == sigma ? 1 : 0;
                if (closure_mu(z, index) != expected || oracle_mu(z, index) != expected) return false;
            }
            for (const auto& [index, v] : closure_mu_table(z, n - 2))
                if (v != 0 || oracle_mu(z, index) != 0) return false;
        }
    }
    return true;
}

bool main_theorem() {
    for (int n = 3; n <= 5; ++n)
        if (!verify_main_theorem(n, 50, 20260000 + static_cast<std::uint64_t>(n)).ok()) return false;
    return true;
}

bool product_formula() {
    for (int n = 3; n <= 5; ++n) {
        Rng rng(777, static_cast<std::uint64_t>(n));
        for (int pair = 0; pair < 100; ++pair) {
            const StringLink a(random_word(rng, n - 1, 16), n), b(random_word(rng, n - 1, 16), n);
            if (!product_formula_failures(a, b, n - 1).empty()) return false;
            for (const auto& index : distinct_multiindices(n - 1, n - 1)) {
                Integer rhs = oracle_mu(a, index) + oracle_mu(b, index);
                for (std::size_t s = 1; s < index.size(); ++s) {
                    const Multiindex j(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(s));
                    const Multiindex k(index.begin() + static_cast<std::ptrdiff_t>(s), index.end());
                    rhs += oracle_mu(a, j) * oracle_mu(b, k);
                }
                if (closure_mu(a * b, index) != rhs) return false;
            }
        }
    }
    return true;
}

bool ranks() {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const QuotientRank r = quotient_rank(n, k);
            const Integer expected = factorial(static_cast<unsigned>(k - 1)) *
                                     binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k));
            if (r.formula != expected || r.enumerated != expected) return false;
        }
    for (int n = 3; n <= 7; ++n)
        if (multilinear_dim(n) != factorial(static_cast<unsigned>(n - 2))) return false;
    for (int n = 3; n <= 6; ++n) {
        const BtfKernelReport r = btf_kernel(n);
        if (r.kernel_dim != factorial(static_cast<unsigned>(n - 2)).get_ui() || !r.span_equal || !r.btf_in_kernel)
            return false;
    }
    return true;
}

bool four_t() {
    for (int n = 3; n <= 6; ++n)
        if (!check_4T(n)) return false;
    DKAlgebra corrupted(4);
    corrupted.override_action({2, 1}, {3, 1}, LieElt(2));
    return !check_4T_report(corrupted).ok();
}

bool pbw() {
    for (int n = 3; n <= 7; ++n) {
        const auto m = pbw_delta_matrix(n);
        if (m.size() != factorial(static_cast<unsigned>(n - 2)).get_ui()) return false;
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c)
                if (m[r][c] != (r == c ? 1 : 0)) return false;
    }
    return true;
}

bool normal_form_round_trip() {
    Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform(2, 5));
        const RFWord w(random_word(rng, n - 1, 30), n);
        const NormalForm nf = normal_form(w);
        const RFWord back = recompose(nf);
        if (!rf_equal(back, w) || normal_form(back) != nf) return false;
    }
    return true;
}

bool rewriting() {
    for (int n = 3; n <= 6; ++n) {
        std::vector<int> gens(static_cast<std::size_t>(n - 1));
        for (int k = 0; k < n - 1; ++k) gens[static_cast<std::size_t>(k)] = k + 1;
        do {
            const LieElt a = left_normed(gens, n - 1);
            if (rewrite_jacobi(a, n) != rewrite_linear_solve(a, n)) return false;
        } while (std::next_permutation(gens.begin(), gens.end()));
    }
    return true;
}

bool top_degree_only(const StringLink& z) {
    for (const auto& [key, e] : normal_form(z).exponents)
        if (static_cast<int>(key.first.size()) < z.components() - 1 && e != 0) return false;
    return true;
}

bool brunnian_characterization() {
    for (int n = 3; n <= 5; ++n) {
        Rng rng(9000, static_cast<std::uint64_t>(n));
        const std::size_t count = permutations_from_two(n - 1).size();
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<long> e;
            for (std::size_t k = 0; k < count; ++k) e.push_back(rng.uniform(-5, 5));
            const StringLink lambda(random_word(rng, n - 1, 8), n);
            const StringLink z = lambda * brunnian_from_exponents(n, e) * lambda.inverse();
            if (!oracle_brunnian(z) || !is_brunnian(z) || !top_degree_only(z)) return false;
        }
        int found = 0;
        while (found < 100) {
            const StringLink z(random_word(rng, n - 1, 20), n);
            if (oracle_brunnian(z)) continue;
            ++found;
            if (is_brunnian(z) || top_degree_only(z)) return false;
        }
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const Criterion criteria[] = {
        {"Kronecker identity, n=3..6", kronecker},
        {"kappa coefficients equal mu, 50 trials per n=3..5", main_theorem},
        {"product formula, 100 pairs per n=3..5", product_formula},
        {"rank formulas", ranks},
        {"4T certificate n=3..6 and negative control", four_t},
        {"PBW delta matrix is the identity, n=3..7", pbw},
        {"normal form round trip and idempotence, 200 words", normal_form_round_trip},
        {"Jacobi rewriting equals Lyndon linear solve, n=3..6", rewriting},
        {"Brunnian test agrees with top-degree normal form, n=3..5", brunnian_characterization},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %d  %s  (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", index, c.name, ms,
                    error.empty() ? "" : "  error: ", error.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
