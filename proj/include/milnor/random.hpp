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

#ifndef MILNOR_RANDOM_HPP
#define MILNOR_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "milnor/common.hpp"
#include "milnor/word.hpp"

namespace milnor {

// Seeded generator with a fully specified output stream: mt19937_64 seeded
// through std::seed_seq, integers drawn by rejection sampling. Unlike
// std::uniform_int_distribution the draws are identical across standard
// libraries.
class Rng {
  public:
    static constexpr const char* algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}
    // Independent stream for trial `stream` of a seeded run.
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw DomainError("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(engine_());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % range);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
    }

  private:
    std::mt19937_64 engine_;
};

// Reduced word from at most max_length random letters t_i^{+-1}, i in 1..alphabet.
inline Word random_word(Rng& rng, int alphabet, int max_length) {
    if (alphabet < 1) throw DomainError("random_word: empty alphabet");
    const auto length = rng.uniform(0, max_length);
    std::vector<Letter> letters;
    for (std::int64_t k = 0; k < length; ++k)
        letters.push_back({static_cast<int>(rng.uniform(1, alphabet)), rng.uniform(0, 1) == 0 ? 1 : -1});
    return Word::from_letters(std::move(letters), static_cast<std::size_t>(alphabet));
}

} // namespace milnor

#endif // MILNOR_RANDOM_HPP
