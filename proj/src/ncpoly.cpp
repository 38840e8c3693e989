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

#include "milnor/ncpoly.hpp"

#include <cstdint>
#include <sstream>

namespace milnor {

bool has_repeated_index(const Multiindex& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i] == m[j]) return true;
    return false;
}

NcPoly::NcPoly(int variable_count, int truncation_degree, bool square_free)
    : variable_count_(variable_count), truncation_degree_(truncation_degree), square_free_(square_free) {
    if (variable_count < 0) throw DomainError("NcPoly: negative variable count");
    if (truncation_degree < 1) throw DomainError("NcPoly: truncation degree must be >= 1");
}

NcPoly NcPoly::one(int variable_count, int truncation_degree, bool square_free) {
    NcPoly p(variable_count, truncation_degree, square_free);
    p.terms_.emplace(Multiindex{}, Integer(1));
    return p;
}

NcPoly NcPoly::variable(int i, int variable_count, int truncation_degree, bool square_free) {
    NcPoly p(variable_count, truncation_degree, square_free);
    p.add_term({i}, Integer(1));
    return p;
}

bool NcPoly::admissible(const Multiindex& m) const {
    if (static_cast<int>(m.size()) > truncation_degree_) return false;
    if (square_free_ && has_repeated_index(m)) return false;
    return true;
}

void NcPoly::add_term(const Multiindex& m, const Integer& c) {
    for (int i : m)
        if (i < 1 || i > variable_count_) throw DomainError("NcPoly: variable index out of range");
    if (c == 0 || !admissible(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer NcPoly::coeff(const Multiindex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool NcPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

int NcPoly::min_positive_degree() const {
    for (const auto& [m, c] : terms_)
        if (!m.empty()) return static_cast<int>(m.size());
    return 0;
}

void NcPoly::check_compatible(const NcPoly& q, const char* op) const {
    if (variable_count_ != q.variable_count_ || truncation_degree_ != q.truncation_degree_ ||
        square_free_ != q.square_free_) {
        throw DomainError(std::string("NcPoly::") + op + ": mode/degree mismatch");
    }
}

NcPoly NcPoly::operator+(const NcPoly& q) const {
    check_compatible(q, "add");
    NcPoly r = *this;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& q) const { return *this + (-q); }

NcPoly NcPoly::scaled(const Integer& c) const {
    NcPoly r(variable_count_, truncation_degree_, square_free_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

namespace {

std::uint64_t index_mask(const Multiindex& m) {
    std::uint64_t mask = 0;
    for (int i : m) mask |= std::uint64_t{1} << (i & 63);
    return mask;
}

} // namespace

NcPoly NcPoly::operator*(const NcPoly& q) const {
    check_compatible(q, "mul");
    NcPoly r(variable_count_, truncation_degree_, square_free_);
    // Square-free disjointness is screened by bitmask; exact check in add_term
    // covers variable counts above 64.
    std::vector<std::uint64_t> qmask;
    if (square_free_) {
        qmask.reserve(q.terms_.size());
        for (const auto& [m, c] : q.terms_) qmask.push_back(index_mask(m));
    }
    Multiindex prod;
    for (const auto& [ma, ca] : terms_) {
        const std::size_t room = static_cast<std::size_t>(truncation_degree_) - ma.size();
        const std::uint64_t amask = square_free_ ? index_mask(ma) : 0;
        std::size_t qi = 0;
        for (const auto& [mb, cb] : q.terms_) {
            const std::size_t idx = qi++;
            // Terms are sorted by length, so nothing later fits either.
            if (mb.size() > room) break;
            if (square_free_ && variable_count_ <= 63 && (amask & qmask[idx])) continue;
            prod = ma;
            prod.insert(prod.end(), mb.begin(), mb.end());
            if (square_free_ && has_repeated_index(prod)) continue;
            auto [it, inserted] = r.terms_.try_emplace(prod, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

NcPoly NcPoly::pow(const Integer& e) const {
    if (constant_term() != 1) throw DomainError("NcPoly::pow: constant term must be 1");
    NcPoly nil = *this - one(variable_count_, truncation_degree_, square_free_);
    NcPoly result = one(variable_count_, truncation_degree_, square_free_);
    NcPoly power = result; // N^j
    for (int j = 1; j <= truncation_degree_; ++j) {
        power = power * nil;
        if (power.terms_.empty()) break;
        Integer b;
        mpz_bin_ui(b.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(j));
        result = result + power.scaled(b);
    }
    return result;
}

std::string NcPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "·";
        for (int i : m) os << 'X' << i;
    }
    return os.str();
}

} // namespace milnor
