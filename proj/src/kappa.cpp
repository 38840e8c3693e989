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

#include "milnor/kappa.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "milnor/random.hpp"

namespace milnor {

KappaCoeffs kappa_coeffs(const StringLink& link) {
    if (auto j = brunnian_witness(link))
        throw NotBrunnianError("kappa_coeffs: input is not Brunnian (deleting strand " + std::to_string(*j) +
                               " leaves a nontrivial link)");
    const int n = link.components();
    const NormalForm nf = normal_form(link);
    KappaCoeffs k;
    k.components = n;
    Multiindex all(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) all[i] = i + 1;
    for (const auto& sigma : permutations_from_two(n - 1)) k.coeffs.emplace_back(sigma, nf.exponent({all, sigma}));
    return k;
}

StringLink brunnian_from_exponents(int components, const std::vector<long>& exponents) {
    const auto perms = permutations_from_two(components - 1);
    if (exponents.size() != perms.size())
        throw DomainError("brunnian_from_exponents: need " + std::to_string(perms.size()) + " exponents");
    StringLink z = StringLink::identity(components);
    for (std::size_t s = 0; s < perms.size(); ++s) {
        if (exponents[s] == 0) continue;
        const StringLink t = tau_n_sigma(components, perms[s]);
        z = z * StringLink(t.word().pow(exponents[s]), components);
    }
    return z;
}

namespace {

constexpr long exponent_bound = 5;

void check_range(int components, int lo, int hi, const char* what) {
    if (components < lo || components > hi)
        throw DomainError(std::string(what) + ": need " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

std::vector<long> sample_exponents(std::size_t count, Rng& rng) {
    std::vector<long> e(count);
    for (auto& x : e) x = static_cast<long>(rng.uniform(-exponent_bound, exponent_bound));
    return e;
}

std::vector<Integer> values(const std::vector<std::pair<Permutation, Integer>>& entries) {
    std::vector<Integer> out;
    for (const auto& [sigma, v] : entries) out.push_back(v);
    return out;
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += threads) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

MainTheoremReport verify_main_theorem(int components, std::size_t trials, std::uint64_t seed,
                                      VerifyOptions options) {
    check_range(components, 3, 6, "verify_main_theorem");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t dim = permutations_from_two(components - 1).size();

    std::vector<std::optional<TrialFailure>> outcome(trials);
    parallel_for(trials, options.threads, [&](std::size_t i) {
        Rng rng(seed, i);
        std::vector<long> e = sample_exponents(dim, rng);
        const StringLink z = brunnian_from_exponents(components, e);
        std::vector<Integer> mu = values(mu_vector(z).entries);
        std::vector<Integer> kappa = values(kappa_coeffs(z).coeffs);
        if (options.corrupt_mu) mu[0] = -mu[0] - 1;
        if (mu != kappa) outcome[i] = TrialFailure{i, std::move(e), std::move(mu), std::move(kappa)};
    });

    MainTheoremReport report;
    report.components = components;
    report.trials = trials;
    report.seed = seed;
    report.prng = Rng::algorithm;
    for (auto& o : outcome)
        if (o) report.failures.push_back(std::move(*o));
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

InjectivityReport compare_outputs(int components, const std::vector<std::vector<long>>& inputs) {
    InjectivityReport report;
    report.components = components;
    report.samples = inputs.size();
    std::map<std::vector<long>, std::vector<Integer>> seen;
    for (const auto& e : inputs) {
        if (seen.count(e)) {
            ++report.duplicate_inputs;
            continue;
        }
        seen.emplace(e, values(mu_vector(brunnian_from_exponents(components, e)).entries));
    }
    report.distinct_inputs = seen.size();
    std::map<std::vector<Integer>, std::vector<long>> preimage;
    for (const auto& [e, mu] : seen) {
        auto [it, fresh] = preimage.emplace(mu, e);
        if (!fresh) report.collisions.emplace_back(it->second, e);
    }
    report.distinct_outputs = preimage.size();
    return report;
}

} // namespace

InjectivityReport verify_injectivity(int components, std::size_t samples, std::uint64_t seed) {
    check_range(components, 3, 5, "verify_injectivity");
    const std::size_t dim = permutations_from_two(components - 1).size();
    std::vector<std::vector<long>> inputs;
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(seed, i);
        inputs.push_back(sample_exponents(dim, rng));
    }
    return compare_outputs(components, inputs);
}

InjectivityReport verify_injectivity_exhaustive(int components, int bound) {
    check_range(components, 3, 5, "verify_injectivity_exhaustive");
    if (bound < 0) throw DomainError("verify_injectivity_exhaustive: negative bound");
    const std::size_t dim = permutations_from_two(components - 1).size();
    std::vector<std::vector<long>> inputs;
    std::vector<long> e(dim, -bound);
    while (true) {
        inputs.push_back(e);
        std::size_t k = 0;
        while (k < dim && e[k] == bound) e[k++] = -bound;
        if (k == dim) break;
        ++e[k];
        if (inputs.size() > 2'000'000) throw DomainError("verify_injectivity_exhaustive: search space too large");
    }
    return compare_outputs(components, inputs);
}

} // namespace milnor
