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

#ifndef MILNOR_WORD_HPP
#define MILNOR_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

struct Letter {
    int generator = 1; // >= 1
    int sign = 1;      // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    Letter inverse() const { return {generator, -sign}; }
};

// Element of the free group on `alphabet_size` generators, always stored
// freely reduced, so syntactic equality is equality in the free group.
class Word {
  public:
    Word() = default;
    explicit Word(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

    // Validates generator ranges and freely reduces.
    static Word from_letters(std::vector<Letter> letters, std::size_t alphabet_size);
    static Word generator(int k, std::size_t alphabet_size, int sign = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t alphabet_size() const { return alphabet_size_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(long long e) const;

    // Canonical text form, e.g. "t1 t2 t1' t2'"; "e" for the empty word.
    std::string render(char symbol = 't') const;

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Letter> letters_;
    std::size_t alphabet_size_ = 0;
};

// Free group product; throws DomainError on alphabet mismatch.
Word concat(const Word& a, const Word& b);
inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }
inline Word inverse(const Word& w) { return w.inverse(); }

// [x, y] = x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

// Left-normed [[...[[w1, w2], w3]...], wk]. Throws DomainError on empty input.
Word simple_commutator(std::span<const Word> ws);

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Grammar: tokens t<k> / m<k>; postfix ' or ^-1 (more generally ^<int>);
// juxtaposition is product; [w1,...,wk] is the left-normed commutator;
// parentheses group; e is the empty word.
Word parse_word(std::string_view text, std::size_t alphabet_size);

} // namespace milnor

#endif // MILNOR_WORD_HPP
