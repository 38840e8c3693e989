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

#ifndef MILNOR_NCPOLY_HPP
#define MILNOR_NCPOLY_HPP

#include <map>
#include <string>

#include "milnor/common.hpp"

namespace milnor {

// Orders monomials by length, then lexicographically.
struct ShortLex {
    bool operator()(const Multiindex& a, const Multiindex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

bool has_repeated_index(const Multiindex& m);

// Truncated element of Z<<X_1, ..., X_n>>. Monomials of length > degree are
// dropped; in square-free mode so are monomials with a repeated index. No
// stored coefficient is zero.
class NcPoly {
  public:
    using Terms = std::map<Multiindex, Integer, ShortLex>;

    NcPoly(int variable_count, int truncation_degree, bool square_free);

    static NcPoly one(int variable_count, int truncation_degree, bool square_free);
    static NcPoly variable(int i, int variable_count, int truncation_degree, bool square_free);

    int variable_count() const { return variable_count_; }
    int truncation_degree() const { return truncation_degree_; }
    bool square_free() const { return square_free_; }
    const Terms& terms() const { return terms_; }

    // Adds c * X_m, applying truncation. Out-of-range indices throw.
    void add_term(const Multiindex& m, const Integer& c);
    Integer coeff(const Multiindex& m) const;
    Integer constant_term() const { return coeff({}); }

    bool is_one() const;
    // Smallest degree d >= 1 carrying a nonzero term, or 0 if none.
    int min_positive_degree() const;

    NcPoly operator+(const NcPoly& q) const;
    NcPoly operator-(const NcPoly& q) const;
    NcPoly operator*(const NcPoly& q) const;
    NcPoly operator-() const;
    NcPoly scaled(const Integer& c) const;

    // (1 + N)^e = sum_j binom(e, j) N^j for e of either sign. Requires constant
    // term 1; N is nilpotent under truncation so the sum is finite.
    NcPoly pow(const Integer& e) const;
    NcPoly inverse() const { return pow(Integer(-1)); }

    // "1 + X1X2 - X2X1" with monomials in short-lex order; "0" if empty.
    std::string render() const;

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.variable_count_ == b.variable_count_ &&
               a.truncation_degree_ == b.truncation_degree_ && a.square_free_ == b.square_free_ &&
               a.terms_ == b.terms_;
    }

  private:
    void check_compatible(const NcPoly& q, const char* op) const;
    bool admissible(const Multiindex& m) const;

    int variable_count_;
    int truncation_degree_;
    bool square_free_;
    Terms terms_;
};

inline NcPoly add(const NcPoly& p, const NcPoly& q) { return p + q; }
inline NcPoly mul(const NcPoly& p, const NcPoly& q) { return p * q; }

} // namespace milnor

#endif // MILNOR_NCPOLY_HPP
