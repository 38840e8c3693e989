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

#include <cstdint>
#include <limits>
#include <vector>

#include "doctest.h"
#include "milnor/kernels/gather_axpy.hpp"
#include "milnor/random.hpp"

using namespace milnor;
using namespace milnor::kernels;

namespace {

struct Case {
    std::vector<std::int64_t> base;
    std::vector<std::int32_t> idx;
    std::vector<std::int64_t> dst;
};

Case random_case(Rng& rng, std::size_t count) {
    Case c;
    const std::size_t base_size = count + 8;
    for (std::size_t k = 0; k < base_size; ++k) c.base.push_back(rng.uniform(-1000000, 1000000));
    for (std::size_t k = 0; k < count; ++k) {
        c.idx.push_back(static_cast<std::int32_t>(rng.uniform(0, static_cast<std::int64_t>(base_size) - 1)));
        c.dst.push_back(rng.uniform(-1000000, 1000000));
    }
    return c;
}

} // namespace

TEST_CASE("scalar kernel is a gathered axpy") {
    const std::vector<std::int64_t> base{10, 20, 30};
    const std::vector<std::int32_t> idx{2, 0, 0, 1};
    std::vector<std::int64_t> dst{1, 1, 1, 1};
    REQUIRE(gather_axpy_scalar(dst.data(), base.data(), idx.data(), idx.size(), -1));
    CHECK(dst == std::vector<std::int64_t>{-29, -9, -9, -19});
}

TEST_CASE("dispatch") {
    CHECK(std::string(scalar_kernels().name) == "scalar");
    const KernelSet& active = active_kernels();
    if (avx2_kernels() == nullptr) CHECK(&active == &scalar_kernels());
}

TEST_CASE("vector kernels agree with the scalar reference") {
    const KernelSet* avx2 = avx2_kernels();
    if (avx2 == nullptr) {
        MESSAGE("AVX2 unavailable; only the scalar path is exercised");
        return;
    }
    Rng rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const auto count = static_cast<std::size_t>(rng.uniform(0, 37));
        const Case c = random_case(rng, count);
        for (int sign : {1, -1}) {
            auto a = c.dst, b = c.dst;
            const bool ra = scalar_kernels().gather_axpy(a.data(), c.base.data(), c.idx.data(), count, sign);
            const bool rb = avx2->gather_axpy(b.data(), c.base.data(), c.idx.data(), count, sign);
            CHECK(ra == rb);
            CHECK(a == b);
        }
    }
}

TEST_CASE("overflow is reported by every variant") {
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    std::vector<const KernelSet*> sets{&scalar_kernels()};
    if (const auto* k = avx2_kernels()) sets.push_back(k);
    for (const KernelSet* k : sets) {
        for (std::size_t pos = 0; pos < 9; ++pos) {
            std::vector<std::int64_t> base{1, hi, lo};
            std::vector<std::int32_t> idx(9, 0);
            std::vector<std::int64_t> dst(9, 0);
            dst[pos] = hi;
            CHECK_FALSE(k->gather_axpy(dst.data(), base.data(), idx.data(), idx.size(), 1));
            std::vector<std::int64_t> dst2(9, -1);
            idx[pos] = 2;
            CHECK_FALSE(k->gather_axpy(dst2.data(), base.data(), idx.data(), idx.size(), 1));
            std::vector<std::int64_t> dst3(9, 0);
            CHECK_FALSE(k->gather_axpy(dst3.data(), base.data(), idx.data(), idx.size(), -1));
        }
        std::vector<std::int64_t> base{hi};
        std::vector<std::int32_t> idx{0};
        std::vector<std::int64_t> dst{-1};
        CHECK(k->gather_axpy(dst.data(), base.data(), idx.data(), 1, 1));
        CHECK(dst[0] == hi - 1);
    }
}
