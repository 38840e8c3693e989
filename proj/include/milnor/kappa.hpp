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

#ifndef MILNOR_KAPPA_HPP
#define MILNOR_KAPPA_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "milnor/common.hpp"
#include "milnor/mulinks.hpp"

namespace milnor {

// Coefficients of kappa in the basis {B(n, sigma)}.
struct KappaCoeffs {
    int components = 0;
    // Every sigma in Sigma(2, ..., n-1), lexicographic.
    std::vector<std::pair<Permutation, Integer>> coeffs;

    friend bool operator==(const KappaCoeffs&, const KappaCoeffs&) = default;
};

// Top-degree normal-form exponents e((1, ..., n-1), sigma). Throws
// NotBrunnianError for non-Brunnian input.
KappaCoeffs kappa_coeffs(const StringLink& link);

// z = prod over sigma (lexicographic) of tau(n, sigma)^{e_sigma}.
StringLink brunnian_from_exponents(int components, const std::vector<long>& exponents);

struct TrialFailure {
    std::size_t seed_index = 0;
    std::vector<long> exponents;
    std::vector<Integer> mu;
    std::vector<Integer> kappa;
};

struct MainTheoremReport {
    int components = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<TrialFailure> failures;
    double elapsed_ms = 0;
    std::string prng;
    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    // Negative control: replace the first mu entry by -mu - 1 before comparing.
    bool corrupt_mu = false;
    // 0 picks the hardware concurrency.
    unsigned threads = 0;
};

// Trial i draws e_sigma uniformly from [-5, 5] using Rng(seed, i) and checks
// kappa_coeffs(z) == mu_vector(z). Results are independent of the thread count.
MainTheoremReport verify_main_theorem(int components, std::size_t trials, std::uint64_t seed,
                                      VerifyOptions options = {});

struct InjectivityReport {
    int components = 0;
    std::size_t samples = 0;
    std::size_t distinct_inputs = 0;
    std::size_t duplicate_inputs = 0;
    std::size_t distinct_outputs = 0;
    // Distinct exponent vectors with the same mu_vector.
    std::vector<std::pair<std::vector<long>, std::vector<long>>> collisions;
    bool ok() const { return collisions.empty(); }
};

// Samples exponent vectors in [-5, 5] and compares their mu_vectors.
InjectivityReport verify_injectivity(int components, std::size_t samples, std::uint64_t seed);
// Every exponent vector in [-bound, bound]^((n-2)!).
InjectivityReport verify_injectivity_exhaustive(int components, int bound);

} // namespace milnor

#endif // MILNOR_KAPPA_HPP
