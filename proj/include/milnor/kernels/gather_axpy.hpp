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

#ifndef MILNOR_KERNELS_GATHER_AXPY_HPP
#define MILNOR_KERNELS_GATHER_AXPY_HPP

#include <cstddef>
#include <cstdint>

namespace milnor::kernels {

// dst[t] += sign * base[idx[t]] for t in [0, count), sign in {+1, -1}.
// The gathered entries must not overlap dst[0, count). Returns false if any
// int64 result overflowed; dst contents are then unspecified.
using GatherAxpyFn = bool (*)(std::int64_t* dst, const std::int64_t* base, const std::int32_t* idx,
                              std::size_t count, int sign);

struct KernelSet {
    const char* name;
    GatherAxpyFn gather_axpy;
};

// Portable reference implementation.
const KernelSet& scalar_kernels();

// AVX2 implementation, or nullptr when not built in or the CPU lacks AVX2.
const KernelSet* avx2_kernels();

// Best kernel set for this machine. Setting MILNOR_KERNEL=scalar in the
// environment forces the reference path.
const KernelSet& active_kernels();

bool gather_axpy_scalar(std::int64_t* dst, const std::int64_t* base, const std::int32_t* idx,
                        std::size_t count, int sign);
#if defined(MILNOR_HAVE_AVX2)
bool gather_axpy_avx2(std::int64_t* dst, const std::int64_t* base, const std::int32_t* idx,
                      std::size_t count, int sign);
#endif

} // namespace milnor::kernels

#endif // MILNOR_KERNELS_GATHER_AXPY_HPP
