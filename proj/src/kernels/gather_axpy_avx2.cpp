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

// Compiled with -mavx2; only reached after a runtime CPU check.
#include "milnor/kernels/gather_axpy.hpp"

#include <immintrin.h>

namespace milnor::kernels {

bool gather_axpy_avx2(std::int64_t* dst, const std::int64_t* base, const std::int32_t* idx,
                      std::size_t count, int sign) {
    // Sign bit of `flags` is set iff some lane overflowed.
    __m256i flags = _mm256_setzero_si256();
    std::size_t t = 0;
    const auto* base_ll = reinterpret_cast<const long long*>(base);
    if (sign > 0) {
        for (; t + 4 <= count; t += 4) {
            __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t));
            __m256i src = _mm256_i32gather_epi64(base_ll, vi, 8);
            __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + t));
            __m256i sum = _mm256_add_epi64(acc, src);
            // a + b overflows iff both operands differ in sign from the result.
            flags = _mm256_or_si256(
                flags, _mm256_and_si256(_mm256_xor_si256(acc, sum), _mm256_xor_si256(src, sum)));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + t), sum);
        }
    } else {
        for (; t + 4 <= count; t += 4) {
            __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + t));
            __m256i src = _mm256_i32gather_epi64(base_ll, vi, 8);
            __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + t));
            __m256i diff = _mm256_sub_epi64(acc, src);
            // a - b overflows iff a, b differ in sign and the result's sign differs from a.
            flags = _mm256_or_si256(
                flags, _mm256_and_si256(_mm256_xor_si256(acc, src), _mm256_xor_si256(acc, diff)));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + t), diff);
        }
    }
    bool ok = _mm256_movemask_pd(_mm256_castsi256_pd(flags)) == 0;
    return gather_axpy_scalar(dst + t, base, idx + t, count - t, sign) && ok;
}

} // namespace milnor::kernels
