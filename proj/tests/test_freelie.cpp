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

#include <functional>
#include <map>

#include "doctest.h"
#include "milnor/freelie.hpp"
#include "milnor/random.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

using Tensor = std::map<std::vector<int>, Rational>;

void accumulate(Tensor& t, const std::vector<int>& m, const Rational& c) {
    Rational& slot = t[m];
    slot += c;
    if (slot == 0) t.erase(m);
}

Tensor commutator(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [u, c] : a)
        for (const auto& [v, d] : b) {
            std::vector<int> uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            accumulate(out, uv, c * d);
            accumulate(out, vu, -c * d);
        }
    return out;
}

// Standard bracketing found by scanning suffixes with the rotation test.
Tensor expand_lyndon(const std::vector<int>& w) {
    if (w.size() == 1) return {{w, 1}};
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        const std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        if (oracle::lyndon_by_rotation(v)) {
            const std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
            return commutator(expand_lyndon(u), expand_lyndon(v));
        }
    }
    return {};
}

Tensor expand(const LieElt& a) {
    Tensor out;
    for (const auto& [w, c] : a.terms())
        for (const auto& [m, d] : expand_lyndon(w)) accumulate(out, m, c * d);
    return out;
}

Tensor expand(const BracketTree& t) {
    if (t.is_leaf()) return {{{t.label()}, 1}};
    return commutator(expand(t.left()), expand(t.right()));
}

Tensor to_tensor(const TensorPoly& p) { return {p.terms().begin(), p.terms().end()}; }

Rational fraction(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

LieElt random_elt(Rng& rng, int g) {
    LieElt a(g);
    const auto terms = rng.uniform(1, 3);
    for (std::int64_t k = 0; k < terms; ++k) {
        const auto words = lyndon_words(g, static_cast<int>(rng.uniform(1, 3)));
        const auto& w = words[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(words.size()) - 1))];
        a.add_term(w, fraction(rng.uniform(-4, 4), rng.uniform(1, 3)));
    }
    return a;
}

BracketTree random_tree(Rng& rng, int g, int leaves) {
    if (leaves == 1) return BracketTree::leaf(static_cast<int>(rng.uniform(1, g)));
    const int left = static_cast<int>(rng.uniform(1, leaves - 1));
    return BracketTree::node(random_tree(rng, g, left), random_tree(rng, g, leaves - left));
}

LieElt x(int i, int g) { return LieElt::generator(i, g); }


long necklace_count(int g, int k) {
    long total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        int m = d, mobius = 1;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) mobius = 0;
                mobius = -mobius;
            }
        if (m > 1) mobius = -mobius;
        long power = 1;
        for (int e = 0; e < k / d; ++e) power *= g;
        total += mobius * power;
    }
    return total / k;
}

} // namespace

TEST_CASE("Lyndon words") {
    for (int g = 1; g <= 4; ++g)
        for (int k = 1; k <= 6; ++k) {
            const auto words = lyndon_words(g, k);
            CHECK(static_cast<long>(words.size()) == necklace_count(g, k));
            for (std::size_t i = 0; i < words.size(); ++i) {
                CHECK(oracle::lyndon_by_rotation(words[i]));
                if (i) CHECK(words[i - 1] < words[i]);
            }
        }
    std::function<void(std::vector<int>&)> every = [&](std::vector<int>& w) {
        if (!w.empty()) CHECK(is_lyndon(w) == oracle::lyndon_by_rotation(w));
        if (w.size() == 6) return;
        for (int a = 1; a <= 3; ++a) {
            w.push_back(a);
            every(w);
            w.pop_back();
        }
    };
    std::vector<int> w;
    every(w);
    CHECK(standard_factorization({1, 1, 2}) == std::pair<LieWord, LieWord>{{1}, {1, 2}});
    CHECK(standard_factorization({1, 2, 1, 3}) == std::pair<LieWord, LieWord>{{1, 2}, {1, 3}});
    CHECK(render_lyndon({1, 1, 2}) == "[x1,[x1,x2]]");
}

TEST_CASE("bracket examples") {
    CHECK(lie_bracket(x(1, 3), x(1, 3)).is_zero());
    const LieElt b = lie_bracket(x(1, 3), x(2, 3));
    CHECK(b == LieElt::basis({1, 2}, 3));
    const LieElt jac = lie_bracket(lie_bracket(x(1, 3), x(2, 3)), x(3, 3)) +
                       lie_bracket(lie_bracket(x(2, 3), x(3, 3)), x(1, 3)) +
                       lie_bracket(lie_bracket(x(3, 3), x(1, 3)), x(2, 3));
    CHECK(jac.is_zero());
    CHECK_THROWS_AS(LieElt(3).add_term({2, 1}, 1), DomainError);
    CHECK_THROWS_AS(lie_bracket(x(1, 2), x(1, 3)), DomainError);
}

TEST_CASE("left-normed brackets") {
    CHECK(left_normed({1, 2, 3}, 3) == lie_bracket(lie_bracket(x(1, 3), x(2, 3)), x(3, 3)));
    CHECK(left_normed({1, 1}, 3).is_zero());
    const LieElt a = left_normed({1, 3, 2}, 3), b = left_normed({1, 2, 3}, 3);
    CHECK_FALSE(a.is_zero());
    CHECK_FALSE(b.is_zero());
    CHECK_FALSE(a == b);
    CHECK(expand(a) != expand(b));
}

TEST_CASE("alternating and Jacobi on random elements") {
    Rng rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        const LieElt a = random_elt(rng, 3), b = random_elt(rng, 3), c = random_elt(rng, 3);
        CHECK(lie_bracket(a, a).is_zero());
        CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
        const LieElt j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                         lie_bracket(c, lie_bracket(a, b));
        CHECK(j.is_zero());
        CHECK(lie_bracket(a + b, c) == lie_bracket(a, c) + lie_bracket(b, c));
    }
}

TEST_CASE("enveloping algebra expansion") {
    CHECK(uea_expand(lie_bracket(x(1, 2), x(2, 2))).render() == "x1x2 - x2x1");
    CHECK(uea_expand(x(1, 2)).render() == "x1");
    Rng rng(62);
    for (int trial = 0; trial < 300; ++trial) {
        const LieElt a = random_elt(rng, 3), b = random_elt(rng, 3);
        const TensorPoly ia = uea_expand(a), ib = uea_expand(b);
        CHECK(uea_expand(lie_bracket(a, b)) == ia * ib - ib * ia);
        CHECK(to_tensor(ia) == expand(a));
    }
}

TEST_CASE("arbitrary bracketings reduce correctly") {
    Rng rng(63);
    for (int trial = 0; trial < 300; ++trial) {
        const BracketTree t = random_tree(rng, 3, static_cast<int>(rng.uniform(1, 6)));
        CHECK(expand(t.evaluate(3)) == expand(t));
    }
    for (int k = 1; k <= 5; ++k)
        for (const auto& w : lyndon_words(3, k)) CHECK(lyndon_tree(w).evaluate(3) == LieElt::basis(w, 3));
    CHECK(lyndon_tree({1, 1, 2}).render() == "[x1,[x1,x2]]");
}

TEST_CASE("PBW leading coefficients") {
    CHECK(pbw_leading_coeff(4, {2, 3}, {2, 3}) == 1);
    CHECK(pbw_leading_coeff(4, {2, 3}, {3, 2}) == 0);
    CHECK(pbw_leading_coeff(3, {2}, {2}) == 1);
    for (int n = 3; n <= 6; ++n) {
        const auto m = pbw_delta_matrix(n);
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) CHECK(m[r][c] == (r == c ? 1 : 0));
    }
}

TEST_CASE("rewriting in the B basis") {
    const auto perms = permutations_from_two(3);
    for (const auto& sigma0 : perms) {
        const SigmaCoeffs c = rewrite_to_basis(b_sigma(4, sigma0), 4);
        for (const auto& [sigma, v] : c) CHECK(v == (sigma == sigma0 ? 1 : 0));
    }
    const LieElt a = lie_bracket(lie_bracket(x(2, 3), x(3, 3)), x(1, 3));
    const SigmaCoeffs c = rewrite_to_basis(a, 4);
    CHECK(c.at({3, 2}) == 1);
    CHECK(c.at({2, 3}) == -1);
    for (const auto& [sigma, v] : rewrite_to_basis(LieElt(3), 4)) CHECK(v == 0);
    CHECK_THROWS_AS(rewrite_to_basis(left_normed({1, 2, 1}, 3), 4), DomainError);
}

TEST_CASE("rewriting routes agree and reconstruct") {
    Rng rng(64);
    for (int n = 3; n <= 6; ++n) {
        const int g = n - 1;
        std::vector<int> gens(static_cast<std::size_t>(g));
        for (int k = 0; k < g; ++k) gens[static_cast<std::size_t>(k)] = k + 1;
        for (int trial = 0; trial < 20; ++trial) {
            for (std::size_t k = gens.size(); k > 1; --k)
                std::swap(gens[k - 1], gens[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1))]);
            const LieElt a = left_normed(gens, g).scaled(fraction(rng.uniform(1, 5), 2));
            const SigmaCoeffs j = rewrite_jacobi(a, n);
            CHECK(j == rewrite_linear_solve(a, n));
            Tensor sum;
            for (const auto& [sigma, v] : j)
                for (const auto& [m, d] : expand(b_sigma(n, sigma))) accumulate(sum, m, v * d);
            CHECK(sum == expand(a));
        }
    }
}

TEST_CASE("multilinear dimension") {
    long fact = 1;
    for (int n = 3; n <= 7; ++n) {
        if (n > 3) fact *= n - 2;
        CHECK(multilinear_dim(n) == fact);
    }
}
