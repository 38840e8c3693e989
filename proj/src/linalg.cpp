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

#include "milnor/linalg.hpp"

#include <utility>

namespace milnor::linalg {

namespace {

// v -= c * row
void axpy(SparseVec& v, const Rational& c, const SparseVec& row) {
    for (const auto& [col, x] : row) {
        auto [it, fresh] = v.try_emplace(col, 0);
        it->second -= c * x;
        if (it->second == 0) v.erase(it);
    }
}

} // namespace

SparseVec Echelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        const int col = it->first;
        auto pivot = rows_.find(col);
        if (pivot == rows_.end()) {
            ++it;
            continue;
        }
        const Rational c = it->second;
        axpy(v, c, pivot->second);
        // Entries below col are untouched; resume just past it.
        it = v.upper_bound(col);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    // The smallest remaining column cannot be a pivot, so it becomes one.
    const Rational lead = v.begin()->second;
    for (auto& [col, x] : v) x /= lead;
    const int col = v.begin()->first;
    rows_.emplace(col, std::move(v));
    return true;
}

std::vector<SparseVec> Echelon::nullspace(int columns) const {
    // Back-substitute to reduced row echelon form.
    std::map<int, SparseVec> rref = rows_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        const int p = it->first;
        for (auto& [q, row] : rref) {
            if (q >= p) break;
            auto hit = row.find(p);
            if (hit == row.end()) continue;
            const Rational c = hit->second;
            axpy(row, c, it->second);
        }
    }
    std::vector<SparseVec> out;
    for (int f = 0; f < columns; ++f) {
        if (rref.count(f)) continue;
        SparseVec x{{f, Rational(1)}};
        for (const auto& [p, row] : rref) {
            auto hit = row.find(f);
            if (hit != row.end()) x[p] = -hit->second;
        }
        out.push_back(std::move(x));
    }
    return out;
}

Rational determinant(DenseMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant: matrix is not square");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(DenseMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw DomainError("solve: right-hand side has wrong length");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational lead = a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] /= lead;
        b[r] /= lead;
        for (std::size_t q = 0; q < rows; ++q) {
            if (q == r || a[q][c] == 0) continue;
            const Rational f = a[q][c];
            for (std::size_t k = c; k < cols; ++k) a[q][k] -= f * a[r][k];
            b[q] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t q = r; q < rows; ++q)
        if (b[q] != 0) return std::nullopt;
    if (pivot_cols.size() != cols) throw DomainError("solve: system is underdetermined");
    std::vector<Rational> x(cols);
    for (std::size_t k = 0; k < r; ++k) x[pivot_cols[k]] = b[k];
    return x;
}

} // namespace milnor::linalg
