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

#ifndef MILNOR_MAGNUS_HPP
#define MILNOR_MAGNUS_HPP

#include <map>
#include <utility>

#include "milnor/common.hpp"
#include "milnor/kernels/gather_axpy.hpp"
#include "milnor/ncpoly.hpp"
#include "milnor/word.hpp"

namespace milnor {

// Magnus expansion m_i -> 1 + X_i truncated at degree D, over as many
// variables as the word's alphabet. In square-free mode m_i^-1 -> 1 - X_i.
NcPoly magnus(const Word& w, int truncation_degree, bool square_free);
NcPoly magnus(const Word& w, int variable_count, int truncation_degree, bool square_free);

enum class MagnusPath { automatic, dense, sparse };

// Same as magnus() with the evaluation strategy pinned; `dense` uses the given
// kernels and throws if the layout is unavailable or int64 overflows. Exists
// so the paths can be checked against each other.
NcPoly magnus_with(const Word& w, int variable_count, int truncation_degree, bool square_free,
                   MagnusPath path, const kernels::KernelSet* kernels = nullptr);

// Coefficient mu(I) of X_I; throws if |I| exceeds the truncation degree.
Integer mu_coeff(const NcPoly& p, const Multiindex& index);

// Key (I, j) for a table of mu(I; j).
using MuKey = std::pair<Multiindex, int>;
using MuTable = std::map<MuKey, Integer>;

// Milnor's indeterminacy Delta(I; j): gcd of mu(J; j') over every sequence
// (J, j') obtained from a cyclic permutation of (i_1, ..., i_m, j) by deleting
// at least one index while keeping order (length >= 2). Returns 0 for an
// empty or all-zero family. Throws DomainError if a needed value is absent.
Integer delta_indeterminacy(const MuTable& table, const Multiindex& index, int target);

// mu mod Delta in [0, Delta), or mu itself when Delta == 0.
Integer mu_bar(const Integer& mu, const Integer& delta);

} // namespace milnor

#endif // MILNOR_MAGNUS_HPP
