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

#ifndef MILNOR_JSON_HPP
#define MILNOR_JSON_HPP

#include <json.hpp>

#include "milnor/conflie.hpp"
#include "milnor/freelie.hpp"
#include "milnor/kappa.hpp"
#include "milnor/mulinks.hpp"
#include "milnor/ncpoly.hpp"
#include "milnor/rfree.hpp"

// JSON encodings. Exact values (integers, rationals) are decimal strings;
// indices and counts are JSON numbers.
namespace milnor::json {

using Json = nlohmann::ordered_json;

// [{"monomial": [i...], "coeff": "c"}]
Json encode(const NcPoly& p);
// {"n", "terms": [{"I", "sigma", "e"}]}
Json encode(const NormalForm& nf);
// {"n", "mu": [{"sigma", "value"}]}
Json encode(const MuVector& v);
// {"n", "coeffs": [{"sigma", "value"}]}
Json encode(const KappaCoeffs& k);
// [{"lyndon_word": [i...], "coeff": "p/q"}]
Json encode(const LieElt& a);
// {"n", "trials", "failures": [{"seed_index", "e", "mu"}], "elapsed_ms", "prng", "seed"}
Json encode(const MainTheoremReport& r);
Json encode(const FourTReport& r);
Json encode(const BtfKernelReport& r);

// Always "p/q", including q = 1.
std::string rational_string(const Rational& q);

} // namespace milnor::json

#endif // MILNOR_JSON_HPP
