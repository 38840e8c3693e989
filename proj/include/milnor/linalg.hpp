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

#ifndef MILNOR_LINALG_HPP
#define MILNOR_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "milnor/common.hpp"

namespace milnor::linalg {

// Column index -> nonzero rational entry.
using SparseVec = std::map<int, Rational>;

// Row space of a growing set of sparse rational vectors, kept in echelon
// form (each stored row has a unit pivot at its smallest column).
class Echelon {
  public:
    // Adds v; returns true if it increased the rank.
    bool insert(SparseVec v);
    // Residual of v modulo the row space; empty iff v lies in it.
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }

    // Basis of {x : r . x = 0 for every stored row r}, restricted to columns
    // [0, columns). One vector per non-pivot column.
    std::vector<SparseVec> nullspace(int columns) const;

  private:
    std::map<int, SparseVec> rows_; // keyed by pivot column
};

using DenseMatrix = std::vector<std::vector<Rational>>;

Rational determinant(DenseMatrix m);

// Unique solution of A x = b, nullopt if inconsistent. Throws DomainError if
// the solution is not unique.
std::optional<std::vector<Rational>> solve(DenseMatrix a, std::vector<Rational> b);

} // namespace milnor::linalg

#endif // MILNOR_LINALG_HPP
