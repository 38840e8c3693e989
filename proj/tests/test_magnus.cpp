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

#include "doctest.h"
#include "milnor/magnus.hpp"
#include "milnor/random.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

// Every sequence over {1..n} of length 0..d.
std::vector<Multiindex> all_monomials(int n, int d) {
    std::vector<Multiindex> out{{}};
    std::function<void(Multiindex&)> grow = [&](Multiindex& m) {
        if (static_cast<int>(m.size()) == d) return;
        for (int i = 1; i <= n; ++i) {
            m.push_back(i);
            out.push_back(m);
            grow(m);
            m.pop_back();
        }
    };
    Multiindex m;
    grow(m);
    return out;
}

NcPoly x(int i, int n, int d, bool sf) { return NcPoly::variable(i, n, d, sf); }

} // namespace

TEST_CASE("power series products") {
    for (bool sf : {false, true}) {
        const NcPoly one = NcPoly::one(2, 3, sf);
        const NcPoly p = (one + x(1, 2, 3, sf)) * (one - x(1, 2, 3, sf));
        if (sf)
            CHECK(p.is_one());
        else
            CHECK(p.render() == "1 - X1X1");
        const NcPoly q = (one + x(1, 2, 3, sf)) * (one + x(2, 2, 3, sf));
        CHECK(q.render() == "1 + X1 + X2 + X1X2");
    }
}

TEST_CASE("expansion examples") {
    const Word m1 = Word::generator(1, 2);
    CHECK(magnus(m1, 3, false).render() == "1 + X1");
    CHECK(magnus(m1.inverse(), 3, false).render() == "1 - X1 + X1X1 - X1X1X1");
    CHECK(magnus(Word(2), 3, false).is_one());
    const NcPoly c = magnus(parse_word("[m1,m2]", 2), 2, false);
    CHECK(c.render() == "1 + X1X2 - X2X1");
    CHECK(mu_coeff(c, {1, 2}) == 1);
    CHECK(mu_coeff(c, {2, 1}) == -1);
    CHECK(mu_coeff(c, {1}) == 0);
    CHECK_THROWS_AS(mu_coeff(c, {1, 2, 1}), DomainError);
}

TEST_CASE("expansion matches the letter-by-letter oracle") {
    Rng rng(21);
    const auto monomials = all_monomials(3, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const Word w = random_word(rng, 3, 14);
        const auto letters = oracle::letters_of(w);
        const NcPoly plain = magnus(w, 4, false);
        const NcPoly sf = magnus(w, 4, true);
        for (const auto& m : monomials) {
            CHECK(plain.coeff(m) == oracle::plain_coeff(letters, m));
            const Integer expected = has_repeated_index(m) ? Integer(0) : oracle::subsequence_coeff(letters, m);
            CHECK(sf.coeff(m) == expected);
        }
    }
}

TEST_CASE("expansion is a homomorphism") {
    Rng rng(22);
    for (int trial = 0; trial < 500; ++trial) {
        const Word a = random_word(rng, 3, 10), b = random_word(rng, 3, 10);
        for (bool sf : {false, true}) {
            CHECK(magnus(a * b, 4, sf) == magnus(a, 4, sf) * magnus(b, 4, sf));
            CHECK(magnus(a.inverse(), 4, sf) == magnus(a, 4, sf).inverse());
        }
    }
}

TEST_CASE("square-free mode is the projection of plain mode") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Word w = random_word(rng, 4, 16);
        NcPoly projected(4, 4, true);
        const NcPoly plain = magnus(w, 4, false);
        for (const auto& [m, c] : plain.terms()) projected.add_term(m, c);
        CHECK(projected == magnus(w, 4, true));
    }
}

TEST_CASE("evaluation paths agree") {
    Rng rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const Word w = random_word(rng, 4, 30);
        for (bool sf : {false, true}) {
            const NcPoly sparse = magnus_with(w, 4, 4, sf, MagnusPath::sparse);
            CHECK(magnus_with(w, 4, 4, sf, MagnusPath::dense, &kernels::scalar_kernels()) == sparse);
            if (const auto* k = kernels::avx2_kernels())
                CHECK(magnus_with(w, 4, 4, sf, MagnusPath::dense, k) == sparse);
        }
    }
}

TEST_CASE("indeterminacy") {
    MuTable table;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) table[{{i}, j}] = 0;
    CHECK(delta_indeterminacy(table, {1, 2}, 3) == 0);

    // Symmetric linking numbers 2, 4, 4: gcd 2.
    auto link = [&](int i, int j, int v) {
        table[{{i}, j}] = v;
        table[{{j}, i}] = v;
    };
    link(1, 2, 2);
    link(1, 3, 4);
    link(2, 3, 4);
    CHECK(delta_indeterminacy(table, {1, 2}, 3) == 2);
    link(1, 3, 3);
    CHECK(delta_indeterminacy(table, {1, 2}, 3) == 1);

    MuTable partial;
    partial[{{1}, 2}] = 1;
    CHECK_THROWS_AS(delta_indeterminacy(partial, {1, 2}, 3), DomainError);
}

TEST_CASE("residue modulo indeterminacy") {
    CHECK(mu_bar(5, 3) == 2);
    CHECK(mu_bar(5, 0) == 5);
    CHECK(mu_bar(-1, 3) == 2);
}
