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

#ifndef LIECOH_STRUCTURE_HPP
#define LIECOH_STRUCTURE_HPP

#include <vector>

#include "liecoh/factor.hpp"
#include "liecoh/lie.hpp"

namespace liecoh {

/* Jordan-Hoelder data of a representation. Irreducibles of g_d are classified
 * by the irreducible polynomial of X_0 (the derived algebra kills every
 * irreducible), so the length vector is the irreducible factorization of the
 * characteristic polynomial of X_0. */
struct LengthVector {
    std::vector<std::pair<Poly, int>> factors;  // (class polynomial, multiplicity)
};
LengthVector length(const LieRep& rep);

/* Splitting into the integer-spectrum block and its complement. Both parts
 * are stable under the whole algebra because X_j shifts the generalized
 * X_0-eigenvalue by one, which preserves integrality. Basis ordering:
 * integer part first, eigenvalues ascending. */
struct BlockSplit {
    LieRep z_part;
    LieRep zprime_part;
    RepMorphism inclusion_z;
    RepMorphism inclusion_zprime;
};
BlockSplit z_split(const LieRep& rep);

/* For representations with nilpotent X_0 (length supported on the class of
 * X): the multiset of Jordan block sizes, the model representation
 * (+) K[X_0]/X_0^{r_i}, and an explicit isomorphism witness onto it.
 * Throws "not supported on Z*0" otherwise. */
struct UnipotentStructure {
    std::vector<int> block_sizes;  // descending
    LieRep canonical;              // direct sum of standard_rep(d, X^{r_i})
    RepMorphism witness;           // canonical -> rep isomorphism
    bool geom_action_zero;         // the forced vanishing of X_1..X_d
};
UnipotentStructure unipotent_structure(const LieRep& rep);

/* Irreducible iff the characteristic polynomial of X_0 is irreducible and
 * X_1..X_d act by zero; otherwise returns a proper nonzero invariant
 * subspace as witness. */
struct IrreducibilityResult {
    bool irreducible;
    Mat invariant_subspace;  // columns span the witness when reducible
};
IrreducibilityResult irreducible_test(const LieRep& rep);

}  // namespace liecoh

#endif
