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

#include "milnor/kernels/dense_magnus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "milnor/ncpoly.hpp"

namespace milnor::kernels {

namespace {

// Number of admissible monomials, or max_entries + 1 once the bound is passed.
std::size_t count_monomials(int n, int degree, bool square_free) {
    std::size_t total = 1, level = 1;
    for (int len = 1; len <= degree; ++len) {
        std::size_t choices = square_free ? (n >= len ? static_cast<std::size_t>(n - len + 1) : 0)
                                          : static_cast<std::size_t>(n);
        level *= choices;
        total += level;
        if (level == 0) break;
        if (total > DenseLayout::max_entries) return DenseLayout::max_entries + 1;
    }
    return total;
}

} // namespace

DenseLayout::DenseLayout(int n, int degree, bool square_free)
    : n_(n), degree_(degree), square_free_(square_free) {
    std::map<Multiindex, std::int32_t> index;
    monomials_.push_back({});
    index.emplace(Multiindex{}, 0);
    blocks_.resize(static_cast<std::size_t>(n) * degree);
    std::vector<Multiindex> prev{{}};
    for (int len = 1; len <= degree; ++len) {
        std::vector<Multiindex> level;
        for (int last = 1; last <= n; ++last) {
            Block& b = blocks_[(last - 1) * degree + (len - 1)];
            b.dst_begin = static_cast<std::int32_t>(monomials_.size());
            b.src_offset = sources_.size();
            for (const auto& prefix : prev) {
                if (square_free && std::find(prefix.begin(), prefix.end(), last) != prefix.end()) continue;
                Multiindex m = prefix;
                m.push_back(last);
                sources_.push_back(index.at(prefix));
                index.emplace(m, static_cast<std::int32_t>(monomials_.size()));
                monomials_.push_back(m);
                level.push_back(std::move(m));
            }
            b.count = static_cast<std::int32_t>(monomials_.size()) - b.dst_begin;
        }
        std::sort(level.begin(), level.end());
        prev = std::move(level);
    }
}

std::shared_ptr<const DenseLayout> DenseLayout::get(int variable_count, int truncation_degree,
                                                    bool square_free) {
    if (variable_count < 1 || truncation_degree < 1) return nullptr;
    if (count_monomials(variable_count, truncation_degree, square_free) > max_entries) return nullptr;
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, std::shared_ptr<const DenseLayout>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(variable_count, truncation_degree, square_free);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const DenseLayout> layout(
        new DenseLayout(variable_count, truncation_degree, square_free));
    cache.emplace(key, layout);
    return layout;
}

bool dense_magnus(const DenseLayout& layout, const Word& w, std::vector<std::int64_t>& coeffs,
                  const KernelSet& kernels) {
    coeffs.assign(layout.size(), 0);
    coeffs[0] = 1;
    const int degree = layout.truncation_degree();
    std::int64_t* c = coeffs.data();
    for (const Letter& l : w.letters()) {
        if (l.generator > layout.variable_count()) throw DomainError("dense_magnus: word exceeds variable count");
        if (layout.square_free()) {
            // Sources never contain the letter, so they are untouched: any order works
            // and both signs are a single pass (M(m^-1) = 1 - X exactly).
            for (int len = 1; len <= degree; ++len) {
                const auto& b = layout.block(l.generator, len);
                if (!kernels.gather_axpy(c + b.dst_begin, c, layout.sources(b), b.count, l.sign)) return false;
            }
        } else if (l.sign > 0) {
            // c' = c (1 + X): read old prefixes, so go from long to short.
            for (int len = degree; len >= 1; --len) {
                const auto& b = layout.block(l.generator, len);
                if (!kernels.gather_axpy(c + b.dst_begin, c, layout.sources(b), b.count, +1)) return false;
            }
        } else {
            // c' = c (1 + X)^-1, i.e. c'[qX] = c[qX] - c'[q]: read new prefixes.
            for (int len = 1; len <= degree; ++len) {
                const auto& b = layout.block(l.generator, len);
                if (!kernels.gather_axpy(c + b.dst_begin, c, layout.sources(b), b.count, -1)) return false;
            }
        }
    }
    return true;
}

} // namespace milnor::kernels
