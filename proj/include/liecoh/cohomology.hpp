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

#ifndef LIECOH_COHOMOLOGY_HPP
#define LIECOH_COHOMOLOGY_HPP

#include <vector>

#include "liecoh/lie.hpp"

namespace liecoh {

/* Degree-q cochains on a subalgebra h of g_d with values in a representation
 * V are stored as dim(V) x C(dim h, q) coefficient matrices. Column w holds
 * the value on the w-th wedge, wedges enumerated lexicographically; a cochain
 * flattens to a single column vector wedge-major (index w*dimV + row). */
struct Cochain {
    LieRep rep;
    Subalgebra sub;
    int degree;
    Mat coeffs;
};

std::size_t binomial(std::size_t n, std::size_t k);

/* Lexicographically ordered q-element subsets of {0, ..., m-1}; the entries
 * index into subalgebra_basis(sub, d). */
std::vector<std::vector<int>> wedge_basis(int m, int q);
std::size_t wedge_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& w);

Mat cochain_to_vec(const Cochain& f);
Cochain cochain_from_vec(const LieRep& rep, Subalgebra sub, int q, const Mat& colvec);

/* Matrix of d^q from degree-q to degree-(q+1) cochains in the wedge bases.
 * Throws when q is out of the range 0..dim(sub). */
Mat ce_differential(const LieRep& rep, Subalgebra sub, int q);

bool is_cocycle(const Cochain& f);

struct CohomologyReport {
    std::vector<std::size_t> dims;                 // H^q for q = 0..dim(sub)
    std::vector<std::vector<Cochain>> cocycle_bases;
};
CohomologyReport cohomology(const LieRep& rep, Subalgebra sub);

/* Basis of the 1-cocycles ker d^1; these are exactly the derivations. */
std::vector<Cochain> derivations(const LieRep& rep, Subalgebra sub);

/* Shuffle cup product, no factorial normalization; the result lives on
 * tensor(f.rep, g.rep) and satisfies d(f u g) = df u g + (-1)^deg(f) f u dg.
 * Degrees beyond dim(sub) give the zero cochain (no columns). */
Cochain cup(const Cochain& f, const Cochain& g);

/* The explicit cocycles of the cohomology table: delta0 on the trivial
 * representation sends X_0 to 1; delta_j on K[X_0]/(X_0-1) sends X_j to 1. */
Cochain delta0_cochain(int d);
Cochain deltaj_cochain(int d, int j);

struct CaLCell {
    Poly alpha;
    int q;
    std::size_t computed;
    std::size_t expected;
    bool pass;
};
struct CaLTable {
    int d;
    std::vector<CaLCell> cells;
    bool all_pass;
};

/* Closed-form check for the full cohomology table: integer alpha = n
 * contributes C(d, n) in degrees n and n+1 and zero elsewhere; every other
 * class vanishes identically. alphas are monic linear or irreducible. */
CaLTable verify_caL_table(int d, const std::vector<Poly>& alphas, int qmax);

std::size_t caL_expected_dim(int d, const Poly& alpha, int q);

}  // namespace liecoh

#endif
