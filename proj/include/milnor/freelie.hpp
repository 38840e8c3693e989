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

#ifndef MILNOR_FREELIE_HPP
#define MILNOR_FREELIE_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "milnor/common.hpp"

namespace milnor {

// A word over letters 1..g. As a LieElt key it always denotes the Lyndon
// basis element with standard bracketing.
using LieWord = std::vector<int>;

bool is_lyndon(const LieWord& w);

// Standard factorization w = uv, v the longest proper Lyndon suffix.
// Requires a Lyndon word of length >= 2.
std::pair<LieWord, LieWord> standard_factorization(const LieWord& w);

// Lyndon words of exact length k over {1, ..., g}, lexicographic (Duval).
std::vector<LieWord> lyndon_words(int g, int k);

// Degree first, then lexicographic.
struct GradedLess {
    bool operator()(const LieWord& a, const LieWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of the free Lie algebra over Q on x_1, ..., x_g in the Lyndon basis.
class LieElt {
  public:
    using Terms = std::map<LieWord, Rational, GradedLess>;

    explicit LieElt(int generator_count = 0);
    static LieElt generator(int i, int generator_count);
    // Single basis element; w must be Lyndon.
    static LieElt basis(LieWord w, int generator_count, Rational coeff = 1);

    int generator_count() const { return g_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const LieWord& w) const;

    // True if every term has degree k.
    bool is_homogeneous(int k) const;

    void add_term(const LieWord& w, const Rational& c);
    LieElt& operator+=(const LieElt& other);
    LieElt& operator-=(const LieElt& other);
    friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
    friend LieElt operator-(LieElt a, const LieElt& b) { return a -= b; }
    LieElt operator-() const;
    LieElt scaled(const Rational& c) const;

    // "3*[1,2] - 1/2*[1,[1,2]]" style, standard bracketing spelled out.
    std::string render(const std::string& symbol = "x") const;

    friend bool operator==(const LieElt&, const LieElt&) = default;

  private:
    void check_word(const LieWord& w) const;

    int g_;
    Terms terms_;
};

// Standard bracketing of a Lyndon word, e.g. 112 -> [x1,[x1,x2]].
std::string render_lyndon(const LieWord& w, const std::string& symbol = "x");

LieElt lie_bracket(const LieElt& a, const LieElt& b);

// [[...[g1, g2], ...], gk]. Labels are 1-based generators.
LieElt left_normed(const std::vector<int>& gens, int generator_count);

// Arbitrary bracketing of generators.
class BracketTree {
  public:
    static BracketTree leaf(int generator);
    static BracketTree node(BracketTree left, BracketTree right);

    bool is_leaf() const { return std::holds_alternative<int>(node_); }
    int label() const { return std::get<int>(node_); }
    const BracketTree& left() const { return *std::get<Children>(node_).first; }
    const BracketTree& right() const { return *std::get<Children>(node_).second; }

    LieElt evaluate(int generator_count) const;
    std::string render(const std::string& symbol = "x") const;

  private:
    using Children = std::pair<std::shared_ptr<const BracketTree>, std::shared_ptr<const BracketTree>>;
    explicit BracketTree(std::variant<int, Children> node) : node_(std::move(node)) {}
    std::variant<int, Children> node_;
};

// Standard bracketing of a Lyndon word as a tree.
BracketTree lyndon_tree(const LieWord& w);

// Noncommutative polynomial with rational coefficients, untruncated.
class TensorPoly {
  public:
    using Terms = std::map<LieWord, Rational, GradedLess>;

    explicit TensorPoly(int generator_count = 0) : g_(generator_count) {}
    int generator_count() const { return g_; }
    const Terms& terms() const { return terms_; }
    Rational coeff(const LieWord& m) const;
    void add_term(const LieWord& m, const Rational& c);

    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    std::string render(const std::string& symbol = "x") const;

    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

  private:
    int g_;
    Terms terms_;
};

// Image in the universal enveloping algebra: iota([u,v]) = iota(u)iota(v) - iota(v)iota(u).
TensorPoly uea_expand(const LieElt& a);

// B(n, sigma) = [x_1, x_sigma(2), ..., x_sigma(n-1)] on g = n-1 generators.
LieElt b_sigma(int n, const Permutation& sigma);

// Coefficient of x_1 x_xi(2) ... x_xi(n-1) in uea_expand(B(n, sigma)).
Rational pbw_leading_coeff(int n, const Permutation& sigma, const Permutation& xi);

// The (n-2)! x (n-2)! matrix of pbw_leading_coeff, rows sigma, columns xi.
std::vector<std::vector<Rational>> pbw_delta_matrix(int n);

// Coefficients c_sigma with a = sum c_sigma B(n, sigma), permutations in
// lexicographic order. Zero coefficients included.
using SigmaCoeffs = std::map<Permutation, Rational>;

// Jacobi route: spell every Lyndon term as a tree, expand into left-normed
// brackets, then move x_1 to the front with explicit Jacobi steps.
SigmaCoeffs rewrite_jacobi(const LieElt& a, int n);
// Linear solve against the Lyndon expansions of every B(n, sigma).
SigmaCoeffs rewrite_linear_solve(const LieElt& a, int n);
// Runs both routes; throws ConsistencyError if they disagree.
SigmaCoeffs rewrite_to_basis(const LieElt& a, int n);

// Counts Lyndon words of length n-1 over n-1 letters that use every letter
// once, i.e. the dimension of the multilinear component.
long multilinear_dim(int n);

} // namespace milnor

#endif // MILNOR_FREELIE_HPP
