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

#include "milnor/word.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "milnor/common.hpp"

namespace milnor {

namespace {

// Appends `l` to an already reduced sequence, cancelling against the tail.
void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign) {
        out.pop_back();
    } else {
        out.push_back(l);
    }
}

void check_letter(const Letter& l, std::size_t alphabet_size) {
    if (l.generator < 1 || static_cast<std::size_t>(l.generator) > alphabet_size) {
        throw DomainError("generator index " + std::to_string(l.generator) +
                          " out of range [1, " + std::to_string(alphabet_size) + "]");
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
}

} // namespace

Word Word::from_letters(std::vector<Letter> letters, std::size_t alphabet_size) {
    Word w(alphabet_size);
    w.letters_.reserve(letters.size());
    for (const auto& l : letters) {
        check_letter(l, alphabet_size);
        push_reduced(w.letters_, l);
    }
    return w;
}

Word Word::generator(int k, std::size_t alphabet_size, int sign) {
    return from_letters({Letter{k, sign}}, alphabet_size);
}

Word Word::inverse() const {
    Word w(alphabet_size_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
}

Word Word::pow(long long e) const {
    Word base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                                 : static_cast<unsigned long long>(e);
    Word result(alphabet_size_);
    // Square-and-multiply keeps the reduction work logarithmic in |e|.
    while (k) {
        if (k & 1ULL) result = concat(result, base);
        k >>= 1;
        if (k) base = concat(base, base);
    }
    return result;
}

std::string Word::render(char symbol) const {
    if (letters_.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << symbol << letters_[i].generator;
        if (letters_[i].sign < 0) os << '\'';
    }
    return os.str();
}

Word concat(const Word& a, const Word& b) {
    if (a.alphabet_size() != b.alphabet_size()) {
        throw DomainError("concat: alphabet mismatch (" + std::to_string(a.alphabet_size()) +
                          " vs " + std::to_string(b.alphabet_size()) + ")");
    }
    std::vector<Letter> out = a.letters();
    out.reserve(a.length() + b.length());
    for (const auto& l : b.letters()) push_reduced(out, l);
    return Word::from_letters(std::move(out), a.alphabet_size());
}

Word commutator(const Word& x, const Word& y) {
    return concat(concat(x, y), concat(x.inverse(), y.inverse()));
}

Word simple_commutator(std::span<const Word> ws) {
    if (ws.empty()) throw DomainError("simple_commutator: empty sequence");
    Word acc = ws.front();
    for (std::size_t i = 1; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
    return acc;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
  public:
    Parser(std::string_view text, std::size_t alphabet_size)
        : text_(text), alphabet_size_(alphabet_size) {}

    Word parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty input (use 'e' for the empty word)", pos_);
        Word w = product();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        return w;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool starts_factor() const {
        char c = peek();
        return c == 't' || c == 'm' || c == 'e' || c == '(' || c == '[';
    }

    Word product() {
        Word acc(alphabet_size_);
        skip_ws();
        if (!starts_factor()) {
            if (at_end()) throw ParseError("unexpected end of input", pos_);
            throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        }
        while (true) {
            skip_ws();
            if (!starts_factor()) break;
            acc = concat(acc, factor());
        }
        return acc;
    }

    Word factor() {
        Word base = atom();
        while (true) {
            skip_ws();
            if (peek() == '\'') {
                ++pos_;
                base = base.inverse();
            } else if (peek() == '^') {
                ++pos_;
                skip_ws();
                base = base.pow(exponent());
            } else {
                return base;
            }
        }
    }

    long long exponent() {
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        long long v = read_number(start, 1'000'000);
        return neg ? -v : v;
    }

    long long read_number(std::size_t start, long long limit) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", pos_);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > limit) throw ParseError("number too large", start);
            ++pos_;
        }
        return v;
    }

    Word atom() {
        std::size_t start = pos_;
        char c = peek();
        if (c == 't' || c == 'm') {
            ++pos_;
            long long k = read_number(pos_, std::numeric_limits<int>::max());
            if (k < 1 || static_cast<std::size_t>(k) > alphabet_size_) {
                throw ParseError("generator index " + std::to_string(k) + " out of range [1, " +
                                     std::to_string(alphabet_size_) + "]",
                                 start);
            }
            return Word::generator(static_cast<int>(k), alphabet_size_);
        }
        if (c == 'e') {
            ++pos_;
            return Word(alphabet_size_);
        }
        if (c == '(') {
            ++pos_;
            Word w = product();
            skip_ws();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            std::vector<Word> args;
            args.push_back(product());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                args.push_back(product());
                skip_ws();
            }
            expect(']');
            return simple_commutator(args);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    void expect(char c) {
        if (peek() != c) {
            if (at_end()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
            throw ParseError(std::string("expected '") + c + "', found '" + peek() + "'", pos_);
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t alphabet_size_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text, std::size_t alphabet_size) {
    return Parser(text, alphabet_size).parse();
}

} // namespace milnor
