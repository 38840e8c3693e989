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

#ifndef MILNOR_KERNELS_DENSE_MAGNUS_HPP
#define MILNOR_KERNELS_DENSE_MAGNUS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "milnor/common.hpp"
#include "milnor/kernels/gather_axpy.hpp"
#include "milnor/word.hpp"

namespace milnor::kernels {

// Dense coefficient layout for truncated Magnus expansions with machine-word
// coefficients. Monomials are grouped by length, then by last letter, so that
// right multiplication by (1 + X_i)^{+-1} touches one contiguous destination
// block per length whose sources (the prefixes) are gathered by index.
class DenseLayout {
  public:
    struct Block {
        std::int32_t dst_begin = 0;
        std::int32_t count = 0;
        std::size_t src_offset = 0; // into sources()
    };

    // Cached per (n, D, square_free); nullptr if the layout would exceed
    // max_entries (callers then take the sparse big-integer path).
    static std::shared_ptr<const DenseLayout> get(int variable_count, int truncation_degree,
                                                  bool square_free);
    static constexpr std::size_t max_entries = std::size_t{1} << 21;

    int variable_count() const { return n_; }
    int truncation_degree() const { return degree_; }
    bool square_free() const { return square_free_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Multiindex>& monomials() const { return monomials_; }
    // Block of monomials of length len (1..D) ending in generator i (1..n).
    const Block& block(int i, int len) const { return blocks_[(i - 1) * degree_ + (len - 1)]; }
    const std::int32_t* sources(const Block& b) const { return sources_.data() + b.src_offset; }

  private:
    DenseLayout(int n, int degree, bool square_free);

    int n_;
    int degree_;
    bool square_free_;
    std::vector<Multiindex> monomials_;
    std::vector<Block> blocks_;
    std::vector<std::int32_t> sources_;
};

// Fills coeffs with the expansion of w in the given layout. Returns false on
// int64 overflow.
bool dense_magnus(const DenseLayout& layout, const Word& w, std::vector<std::int64_t>& coeffs,
                  const KernelSet& kernels);

} // namespace milnor::kernels

#endif // MILNOR_KERNELS_DENSE_MAGNUS_HPP
