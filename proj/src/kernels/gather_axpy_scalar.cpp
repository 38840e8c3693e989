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

#include "milnor/kernels/gather_axpy.hpp"

namespace milnor::kernels {

bool gather_axpy_scalar(std::int64_t* dst, const std::int64_t* base, const std::int32_t* idx,
                        std::size_t count, int sign) {
    bool ok = true;
    if (sign > 0) {
        for (std::size_t t = 0; t < count; ++t) ok &= !__builtin_add_overflow(dst[t], base[idx[t]], &dst[t]);
    } else {
        for (std::size_t t = 0; t < count; ++t) ok &= !__builtin_sub_overflow(dst[t], base[idx[t]], &dst[t]);
    }
    return ok;
}

} // namespace milnor::kernels
