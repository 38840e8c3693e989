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

#ifndef MILNOR_CONFLIE_HPP
#define MILNOR_CONFLIE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/common.hpp"
#include "milnor/freelie.hpp"

namespace milnor {

// Generator B_{k,i} with 1 <= i < k. It is letter i of factor k-1.
struct DKLabel {
    int k = 0;
    int i = 0;
    friend auto operator<=>(const DKLabel&, const DKLabel&) = default;
};

// How B_{a,b} with a < b is read. The Drinfeld-Kohno algebra over Q is
// consistent with B_{a,b} = B_{b,a}; the sign-reversing reading is kept to
// show that it contradicts the relations.
enum class LabelConvention { symmetric, antisymmetric };

// Element of the Drinfeld-Kohno Lie algebra of Conf(n): as a vector space the
// direct sum of free Lie algebras, factor j on B_{j+1,1}, ..., B_{j+1,j}.
class DKElt {
  public:
    explicit DKElt(int n);
    static DKElt generator(DKLabel b, int n);
    // B_{a,b} for distinct a, b in [1, n]; a < b is resolved by the convention.
    static DKElt label(int a, int b, int n, LabelConvention convention = LabelConvention::symmetric);
    static DKElt from_factor(int j, LieElt value, int n);

    int n() const { return n_; }
    // Factor j in 1..n-1.
    const LieElt& factor(int j) const;
    bool is_zero() const;
    bool is_homogeneous(int degree) const;

    DKElt& operator+=(const DKElt& o);
    DKElt& operator-=(const DKElt& o);
    friend DKElt operator+(DKElt a, const DKElt& b) { return a += b; }
    friend DKElt operator-(DKElt a, const DKElt& b) { return a -= b; }
    DKElt operator-() const { return scaled(-1); }
    DKElt scaled(const Rational& c) const;

    // Generators spelled "B3,1".
    std::string render() const;

    friend bool operator==(const DKElt&, const DKElt&) = default;

  private:
    void check_factor(int j) const;
    int n_;
    std::vector<LieElt> factors_;
};

// Parses "B<k>,<i>" (either order; i > k resolved by the convention).
DKElt parse_dk_label(std::string_view text, int n, LabelConvention convention = LabelConvention::symmetric);

// Bracket of the Drinfeld-Kohno algebra. Factor j is an ideal of the
// subalgebra on factors 1..j, so a lower factor acts on a higher one by
// derivations. On generators, with t_{ab} = B_{b,a} and i < j < m:
//   [t_ij, t_lm] = 0 for l not in {i, j}
//   [t_ij, t_im] = [t_im, t_jm]
//   [t_ij, t_jm] = [t_jm, t_im]
class DKAlgebra {
  public:
    explicit DKAlgebra(int n);
    int n() const { return n_; }

    // Replaces [actor, target] (actor in a strictly lower factor) by value,
    // an element of the target's factor. For negative controls.
    void override_action(DKLabel actor, DKLabel target, LieElt value);

    LieElt act_on_generator(DKLabel actor, DKLabel target) const;
    // ad(x)(y) for x in factor p, y in factor q > p.
    LieElt act(const LieElt& x, int p, const LieElt& y, int q) const;

    DKElt bracket(const DKElt& a, const DKElt& b) const;

  private:
    LieElt derive_by_generator(DKLabel actor, const LieWord& w, int q) const;

    int n_;
    std::map<std::pair<DKLabel, DKLabel>, LieElt> overrides_;
};

DKElt dk_bracket(const DKElt& a, const DKElt& b);

struct FourTReport {
    int n = 0;
    std::size_t disjoint_instances = 0; // [B_{s2,s1}, B_{s4,s3}]
    std::size_t triangle_instances = 0; // [B_{s2,s1}, B_{s3,s1} + B_{s3,s2}]
    std::size_t jacobi_instances = 0;   // generator triples
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Evaluates both relation families for every permutation of {1, ..., n} and
// the Jacobi identity on every generator triple.
FourTReport check_4T_report(const DKAlgebra& algebra, LabelConvention convention = LabelConvention::symmetric);
bool check_4T(int n);

// Element of the associated graded of the torus group: graded pieces indexed
// by increasing I in {1, ..., torus_dim}, each a DKElt homogeneous of degree |I|.
class TorusElt {
  public:
    TorusElt(int n, int torus_dim);
    static TorusElt homogeneous(Multiindex support, DKElt value, int torus_dim);

    int n() const { return n_; }
    int torus_dim() const { return torus_dim_; }
    const std::map<Multiindex, DKElt>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }
    DKElt piece(const Multiindex& support) const;

    void add(const Multiindex& support, const DKElt& value);
    TorusElt& operator+=(const TorusElt& o);
    friend TorusElt operator+(TorusElt a, const TorusElt& b) { return a += b; }
    TorusElt scaled(const Rational& c) const;

    std::string render() const;
    friend bool operator==(const TorusElt&, const TorusElt&) = default;

  private:
    int n_;
    int torus_dim_;
    std::map<Multiindex, DKElt> pieces_;
};

// t_{k,i}(l) in Conf(n); the torus has dimension n-1.
TorusElt torus_generator(int k, int i, int l, int n);
// Parses "t<k>,<i>(<l>)".
TorusElt parse_torus_generator(std::string_view text, int n);

// w = #{(i, j) in I x J : i > j}.
int fox_exponent(const Multiindex& support_i, const Multiindex& support_j);

// [u, v]: zero on overlapping supports, else (-1)^w [alpha, beta] on I u J.
TorusElt fox_bracket(const TorusElt& u, const TorusElt& v);

// Deletion of strand i in [1, n]: kills B_{k,j} with k = i or j = i and
// relabels the surviving indices.
DKElt psi_delete(const DKElt& a, int i);
TorusElt psi_delete(const TorusElt& u, int i);

struct BtfElement {
    Permutation sigma;
    TorusElt element;
    // element's value on N = (1, ..., n-1) is sign * B(n, sigma) in factor n-1.
    int sign = 0;
};

// t(n, sigma) = [t_{n,1}(1), t_{n,sigma(2)}(sigma(2)), ...] by iterated Fox brackets.
std::vector<BtfElement> btf_basis(int n);

struct BtfKernelReport {
    int n = 0;
    std::size_t domain_dim = 0;   // degree n-1 Lyndon basis over all factors
    std::size_t kernel_dim = 0;   // dim of the common kernel of psi_1..psi_n
    std::size_t btf_rank = 0;     // rank of the btf_basis vectors
    bool btf_in_kernel = false;   // every psi_r kills every t(n, sigma)
    bool span_equal = false;      // span(btf_basis) == kernel
    Rational pbw_determinant = 0; // det of the PBW delta matrix
};

BtfKernelReport btf_kernel(int n);
std::size_t btf_kernel_rank(int n);

} // namespace milnor

#endif // MILNOR_CONFLIE_HPP
