/*
   Copyright 2026 the liecoh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIECOH_LIE_HPP
#define LIECOH_LIE_HPP

#include <optional>
#include <vector>

#include "liecoh/linalg.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/poly.hpp"

namespace liecoh {

/* The solvable Lie algebra g_d with basis X_0, ..., X_d and relations
 * [X_0, X_j] = X_j, [X_j, X_k] = 0 for 1 <= j, k <= d. The bracket table is
 * generated from the relations, never stored. */

enum class Subalgebra {
    full,  // span X_0..X_d
    geom,  // span X_1..X_d, the derived subalgebra
    cycl   // span X_0 (the arithmetic/cyclotomic line; both are this span)
};

/* Global basis indices (into 0..d) of the chosen subalgebra. */
std::vector<int> subalgebra_basis(Subalgebra s, int d);

/* [X_i, X_j] as (coefficient, basis index) or nullopt when zero. */
struct BracketTerm {
    int coeff;  // +1 or -1
    int index;
};
std::optional<BracketTerm> bracket(int i, int j);

/* A finite dimensional representation of g_d: one square matrix per basis
 * element, in a fixed basis of the underlying space. */
class LieRep {
   public:
    LieRep(int d, std::vector<Mat> action);

    int d() const { return d_; }
    std::size_t dim() const { return dim_; }
    const Mat& action(int i) const { return action_[i]; }
    const std::vector<Mat>& actions() const { return action_; }

    bool operator==(const LieRep& o) const {
        return d_ == o.d_ && action_ == o.action_;
    }

   private:
    int d_;
    std::size_t dim_;
    std::vector<Mat> action_;
};

/* K[X_0]/p(X_0): X_0 acts as the companion matrix of p, X_j act as zero.
 * Requires p monic of nonzero degree... degree one and up; the unit object
 * is standard_rep(d, X). */
LieRep standard_rep(int d, const Poly& p);
LieRep trivial_rep(int d);  // standard_rep(d, X)
LieRep zero_rep(int d);     // the zero-dimensional representation

Mat companion_matrix(const Poly& p);  // multiplication by X on 1, X, ..., X^{n-1}

/* Tannakian operations; Kronecker factors are first-factor major, so
 * hom_rep(a, b) is entrywise equal to tensor(dual(a), b). The dual acts by
 * minus the transpose (the standard convention for the contragredient of a
 * differential action). */
LieRep tensor(const LieRep& a, const LieRep& b);
LieRep dual(const LieRep& a);
LieRep direct_sum(const LieRep& a, const LieRep& b);
LieRep hom_rep(const LieRep& a, const LieRep& b);

LieRep conjugate(const LieRep& rep, const Mat& s);  // s^{-1} A s, s invertible

/* The two-dimensional extension representations behind the classes
 * [log chi] and [eps^{s_j}]: X_0 = [[0,1],[0,0]] with everything else zero,
 * and X_0 = [[1,0],[0,0]], X_j = [[0,1],[0,0]] respectively. */
LieRep logchi_extension_rep(int d);
LieRep sj_extension_rep(int d, int j);

struct BracketCheck {
    int i, j;          // offending pair
    bool pass;
};
struct ValidationReport {
    bool ok;
    std::vector<BracketCheck> checks;  // one per bracket identity
};
ValidationReport validate(const LieRep& rep);

struct RepMorphism {
    LieRep source, target;
    Mat matrix;  // matrix * source.action[i] == target.action[i] * matrix
};
bool intertwines(const RepMorphism& m);

/* Basis of the space of intertwiners source -> target. */
std::vector<Mat> intertwiner_space(const LieRep& source, const LieRep& target);

/* The swap intertwiner tensor(a,b) -> tensor(b,a). */
Mat tensor_swap(std::size_t dim_a, std::size_t dim_b);

}  // namespace liecoh

#endif
