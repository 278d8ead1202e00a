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

#ifndef LIECOH_FACTOR_HPP
#define LIECOH_FACTOR_HPP

#include <vector>

#include "liecoh/poly.hpp"

namespace liecoh {

/* Factorization over Q is only needed at desk scale; the search is the
 * classical bounded one over integer-coefficient factor candidates
 * (interpolation through divisors of sample values, Mignotte coefficient
 * filter), so the degree is capped. */
inline constexpr int kFactorDegreeBound = 12;

struct SquarefreeRoots {
    Poly squarefree;                          // p / gcd(p, p'), monic
    std::vector<std::pair<Int, int>> roots;   // integer roots with multiplicity in p
};

/* Throws std::invalid_argument("zero polynomial has no root data") on 0. */
SquarefreeRoots squarefree_and_integer_roots(const Poly& p);

struct Factorization {
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
};

/* Monic irreducible factors with multiplicity; product times lc equals the
 * input. Deterministic order (degree, then coefficient order). Throws
 * "factorization degree bound exceeded" above kFactorDegreeBound. */
Factorization factor_rationals(const Poly& p);

/* All integer roots of p with multiplicities (rational root theorem). */
std::vector<std::pair<Int, int>> integer_roots(const Poly& p);

}  // namespace liecoh

#endif
