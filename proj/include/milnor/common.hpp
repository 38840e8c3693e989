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

#ifndef MILNOR_COMMON_HPP
#define MILNOR_COMMON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace milnor {

using Integer = mpz_class;
using Rational = mpq_class;

// Ordered sequence of indices, 1-based. Used both for multiindices I and for
// monomials X_I.
using Multiindex = std::vector<int>;

// A permutation of {2, ..., k} in one-line notation: (sigma(2), ..., sigma(k)).
using Permutation = std::vector<int>;

// Input violated an operation's precondition.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// An internal cross-check failed. Signals a bug, never bad input.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Operation requires a Brunnian string link.
class NotBrunnianError : public DomainError {
  public:
    using DomainError::DomainError;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Lexicographic list of all permutations of {2, ..., k} (k >= 1). For k <= 2
// this is the single empty or one-element permutation.
std::vector<Permutation> permutations_from_two(int k);

// Strictly increasing multiindices of length k drawn from {1, ..., m}, in
// lexicographic order.
std::vector<Multiindex> increasing_multiindices(int m, int k);

// All sequences of distinct entries from {1, ..., m} with length in [1, max_len],
// ordered by (length, lexicographic).
std::vector<Multiindex> distinct_multiindices(int m, int max_len);

// Validates that sigma is a bijection of {2, ..., n-1} in one-line notation.
void check_permutation(const Permutation& sigma, int components);

std::string join(const std::vector<int>& xs, const char* sep = ",");

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

} // namespace milnor

#endif // MILNOR_COMMON_HPP
