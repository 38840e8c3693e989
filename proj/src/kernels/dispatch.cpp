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

#include <cstdlib>
#include <string_view>

#include "milnor/kernels/gather_axpy.hpp"

namespace milnor::kernels {

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", &gather_axpy_scalar};
    return set;
}

const KernelSet* avx2_kernels() {
#if defined(MILNOR_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") != 0;
    }();
    static const KernelSet set{"avx2", &gather_axpy_avx2};
    return supported ? &set : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet& active_kernels() {
    static const KernelSet* chosen = [] {
        const char* forced = std::getenv("MILNOR_KERNEL");
        if (forced && std::string_view(forced) == "scalar") return &scalar_kernels();
        if (const KernelSet* k = avx2_kernels()) return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

} // namespace milnor::kernels
