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

#include "doctest.h"
#include "milnor/kappa.hpp"
#include "milnor/random.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

std::vector<Integer> values(const KappaCoeffs& k) {
    std::vector<Integer> out;
    for (const auto& [sigma, v] : k.coeffs) out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("coefficient examples") {
    for (int n = 3; n <= 5; ++n) {
        const auto perms = permutations_from_two(n - 1);
        for (const auto& sigma0 : perms) {
            const KappaCoeffs k = kappa_coeffs(tau_n_sigma(n, sigma0));
            REQUIRE(k.coeffs.size() == perms.size());
            for (const auto& [sigma, v] : k.coeffs) CHECK(v == (sigma == sigma0 ? 1 : 0));
        }
    }
    const StringLink z = StringLink::parse("[t1,t2,t3]^2 [t1,t3,t2]'", 4);
    CHECK(values(kappa_coeffs(z)) == std::vector<Integer>{2, -1});
    CHECK(values(kappa_coeffs(StringLink::identity(4))) == std::vector<Integer>{0, 0});
    CHECK_THROWS_AS(kappa_coeffs(StringLink::parse("t1", 4)), NotBrunnianError);
    CHECK_THROWS_AS(kappa_coeffs(StringLink::parse("[t1,t2]", 4)), NotBrunnianError);
}

TEST_CASE("coefficients are additive and match the invariants") {
    Rng rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform(3, 5));
        const std::size_t count = permutations_from_two(n - 1).size();
        std::vector<long> e1, e2, sum;
        for (std::size_t k = 0; k < count; ++k) {
            e1.push_back(rng.uniform(-5, 5));
            e2.push_back(rng.uniform(-5, 5));
            sum.push_back(e1.back() + e2.back());
        }
        const StringLink z1 = brunnian_from_exponents(n, e1), z2 = brunnian_from_exponents(n, e2);
        const StringLink z = z1 * z2;
        CHECK(is_brunnian(z));
        const auto k = values(kappa_coeffs(z));
        CHECK(k == std::vector<Integer>(sum.begin(), sum.end()));
        // Both products are top-degree, so they commute in the reduced free group.
        CHECK(rf_equal(z, z2 * z1));
        const MuVector mu = mu_vector(z);
        for (std::size_t s = 0; s < count; ++s) {
            CHECK(mu.entries[s].second == k[s]);
            Multiindex index{1};
            index.insert(index.end(), mu.entries[s].first.begin(), mu.entries[s].first.end());
            CHECK(oracle::subsequence_coeff(oracle::letters_of(z.word()), index) == k[s]);
        }
    }
}

TEST_CASE("main theorem harness") {
    CHECK(verify_main_theorem(3, 50, 1).ok());
    const MainTheoremReport r = verify_main_theorem(5, 50, 2);
    CHECK(r.ok());
    CHECK(r.trials == 50);
    CHECK(r.prng == "mt19937_64");
    CHECK_THROWS_AS(verify_main_theorem(2, 5, 1), DomainError);
    CHECK_THROWS_AS(verify_main_theorem(7, 5, 1), DomainError);
}

TEST_CASE("main theorem negative control") {
    const MainTheoremReport r = verify_main_theorem(4, 10, 3, {.corrupt_mu = true});
    CHECK(r.failures.size() == 10);
    for (const auto& f : r.failures) CHECK(f.mu[0] == -f.kappa[0] - 1);
}

TEST_CASE("harness is independent of thread count") {
    const MainTheoremReport one = verify_main_theorem(4, 30, 9, {.corrupt_mu = true, .threads = 1});
    const MainTheoremReport many = verify_main_theorem(4, 30, 9, {.corrupt_mu = true, .threads = 4});
    REQUIRE(one.failures.size() == many.failures.size());
    for (std::size_t k = 0; k < one.failures.size(); ++k) {
        CHECK(one.failures[k].seed_index == many.failures[k].seed_index);
        CHECK(one.failures[k].exponents == many.failures[k].exponents);
    }
}

TEST_CASE("injectivity") {
    const InjectivityReport three = verify_injectivity_exhaustive(3, 3);
    CHECK(three.distinct_inputs == 7);
    CHECK(three.distinct_outputs == 7);
    CHECK(three.ok());
    const InjectivityReport four = verify_injectivity(4, 100, 5);
    CHECK(four.ok());
    CHECK(four.distinct_outputs == four.distinct_inputs);
    CHECK(four.distinct_inputs + four.duplicate_inputs == four.samples);
    // Range [-5, 5] has 11 values, so 30 draws at n = 3 must repeat.
    const InjectivityReport dup = verify_injectivity(3, 30, 6);
    CHECK(dup.duplicate_inputs > 0);
    CHECK(dup.ok());
}
