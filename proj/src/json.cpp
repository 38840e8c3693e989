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

#include "milnor/json.hpp"

namespace milnor::json {

namespace {

Json strings(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.get_str());
    return a;
}

Json sigma_table(const std::vector<std::pair<Permutation, Integer>>& entries) {
    Json a = Json::array();
    for (const auto& [sigma, v] : entries) a.push_back({{"sigma", sigma}, {"value", v.get_str()}});
    return a;
}

} // namespace

std::string rational_string(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Json encode(const NcPoly& p) {
    Json a = Json::array();
    for (const auto& [m, c] : p.terms()) a.push_back({{"monomial", m}, {"coeff", c.get_str()}});
    return a;
}

Json encode(const NormalForm& nf) {
    Json terms = Json::array();
    for (const auto& [key, e] : nf.exponents)
        terms.push_back({{"I", key.first}, {"sigma", key.second}, {"e", e.get_str()}});
    return {{"n", nf.components}, {"terms", std::move(terms)}};
}

Json encode(const MuVector& v) { return {{"n", v.components}, {"mu", sigma_table(v.entries)}}; }

Json encode(const KappaCoeffs& k) { return {{"n", k.components}, {"coeffs", sigma_table(k.coeffs)}}; }

Json encode(const LieElt& a) {
    Json out = Json::array();
    for (const auto& [w, c] : a.terms()) out.push_back({{"lyndon_word", w}, {"coeff", rational_string(c)}});
    return out;
}

Json encode(const MainTheoremReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"seed_index", f.seed_index}, {"e", f.exponents}, {"mu", strings(f.mu)},
                            {"kappa", strings(f.kappa)}});
    return {{"n", r.components},   {"trials", r.trials},         {"failures", std::move(failures)},
            {"elapsed_ms", r.elapsed_ms}, {"prng", r.prng}, {"seed", std::to_string(r.seed)}};
}

Json encode(const FourTReport& r) {
    return {{"n", r.n},
            {"ok", r.ok()},
            {"triangle_instances", r.triangle_instances},
            {"disjoint_instances", r.disjoint_instances},
            {"jacobi_instances", r.jacobi_instances},
            {"failures", r.failures}};
}

Json encode(const BtfKernelReport& r) {
    return {{"n", r.n},
            {"domain_dim", r.domain_dim},
            {"kernel_dim", r.kernel_dim},
            {"btf_rank", r.btf_rank},
            {"btf_in_kernel", r.btf_in_kernel},
            {"span_equal", r.span_equal},
            {"pbw_determinant", rational_string(r.pbw_determinant)}};
}

} // namespace milnor::json
