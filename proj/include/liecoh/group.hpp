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

#ifndef LIECOH_GROUP_HPP
#define LIECOH_GROUP_HPP

#include <functional>
#include <string>
#include <vector>

#include "liecoh/lie.hpp"
#include "liecoh/padic.hpp"

namespace liecoh {

/* The group U (x| Z_p^d with U = 1 + 2p^c Z_p, realized inside GL_{d+1}(Q_p)
 * as [[u, z], [0, 1]]. Default c = 1 for odd p; p = 2 requires c >= 2. */
struct PadicParams {
    Int p;
    int c;
    PadicParams(Int prime, int cc);
    int v2() const { return p == 2 ? 1 : 0; }
    int vc() const { return c + v2(); }  // v_p(2 p^c)
    Int two_pc() const { return 2 * ipow(p, c); }
};

using PadicMat = std::vector<std::vector<PadicScalar>>;

struct GroupElement {
    PadicParams params;
    PadicScalar u;                // unit in 1 + 2p^c Z_p
    std::vector<PadicScalar> z;   // d coordinates in Z_p
    GroupElement(PadicParams pp, PadicScalar uu, std::vector<PadicScalar> zz);
    int d() const { return static_cast<int>(z.size()); }
    int min_prec() const;
};

struct AlgebraElement {
    PadicParams params;
    PadicScalar a;                // X_0 coefficient, in 2p^c Z_p for exp
    std::vector<PadicScalar> b;   // X_j coefficients in Z_p
    AlgebraElement(PadicParams pp, PadicScalar aa, std::vector<PadicScalar> bb);
    int d() const { return static_cast<int>(b.size()); }
    int min_prec() const;
};

GroupElement group_identity(const PadicParams& pp, int d, int prec);
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);
PadicMat group_matrix(const GroupElement& g);           // (d+1) x (d+1)
PadicMat algebra_matrix(const AlgebraElement& x);
AlgebraElement algebra_bracket(const AlgebraElement& x, const AlgebraElement& y);

/* The generators: r_0 = exp(2p^c X_0) and r_j = exp(X_j) = (1, e_j). */
GroupElement generator_r(const PadicParams& pp, int d, int j, int prec);
AlgebraElement algebra_x(const PadicParams& pp, int d, int i, int prec);  // X_i

/* exp and log between 2p^c Z_p (x| Z_p^d and U (x| Z_p^d, evaluated as
 * truncated matrix series on the defining representation. The truncation
 * index comes from the tail bound
 *   v((n!)^{-1} X^n) >= C + (n - dM) v_p(2p^c) - v_p(n!)
 * with M the joint nilpotency bound and C the infimum over the product set
 * X_1^{j_1} ... X_d^{j_d} (X_0^nil)^{j_0}, j_i < M. */
GroupElement mat_exp(const AlgebraElement& x);
AlgebraElement mat_log(const GroupElement& g);

/* The 1-cocycles: log chi(g) = log u is additive; s_j(g) = z_j satisfies
 * s_j(gh) = s_j(g) + chi(g) s_j(h). */
PadicScalar cocycle_logchi(const GroupElement& g);
PadicScalar cocycle_s(int j, const GroupElement& g);

struct ExpBound {
    int M;  // (X_0^nil)^M = 0 and X_j^M = 0
    int C;  // inf of valuations over the product set (0 for integral reps)
};
ExpBound exp_bound(const LieRep& rep, const Int& p);
int exp_truncation_index(const ExpBound& eb, const PadicParams& pp, int d, int N);

/* Nilpotent part of the Jordan decomposition of X_0, exact over Q; the
 * spectrum must be integral. */
Mat jordan_nilpotent_part(const Mat& a0);

/* The integration functor on Rep^Z with p-integral matrices: the action of g
 * is exp of rho(log g), truncated by the bound above, correct mod p^N for
 * the stored residue lifts. */
PadicMat v_functor(const LieRep& rep, const GroupElement& g, int N);

/* Exact operator identities of the semidirect product, as rational
 * (d+1)x(d+1) matrix checks. */
struct RelationReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    bool ok;
};
RelationReport relation_check(int d);

/* Group-side extension actions built from the cocycles: gamma acts by
 * [[1, log chi(gamma)], [0, 1]] and [[chi(gamma), s_j(gamma)], [0, 1]]. */
PadicMat logchi_group_action(const GroupElement& g, int N);
PadicMat sj_group_action(int j, const GroupElement& g, int N);

/* (act(exp(t X_i)) - 1)/t for t = p^k with k large enough that the result
 * is the derivative mod p^N. */
using GroupAction = std::function<PadicMat(const GroupElement&, int)>;
PadicMat differentiate_one_param(const GroupAction& act, int i, const PadicParams& pp,
                                 int d, int N);

PadicMat padic_mat_mul(const PadicMat& a, const PadicMat& b);
PadicMat padic_identity_mat(const Int& p, int n, int prec);
bool padic_mat_congruent(const PadicMat& a, const PadicMat& b, int digits);

}  // namespace liecoh

#endif
