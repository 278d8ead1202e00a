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

#ifndef LIECOH_PADIC_HPP
#define LIECOH_PADIC_HPP

#include <string>

#include "liecoh/rational.hpp"

namespace liecoh {

/* An element of Z_p known modulo p^prec. The residue is the chosen lift in
 * [0, p^prec); series evaluations treat it as exact and state congruences
 * for that lift. Precision propagates pessimistically: sums keep the
 * minimum, products gain the partner's valuation floor, division by p^k
 * costs k digits. */
class PadicScalar {
   public:
    PadicScalar(Int p, int prec, Int value);

    const Int& prime() const { return p_; }
    int prec() const { return prec_; }
    const Int& residue() const { return residue_; }
    Int modulus() const { return ipow(p_, prec_); }

    /* Lower bound on v_p of every element of the residue class: exact when
     * the residue is nonzero, prec when it vanishes. */
    int valuation_floor() const;
    bool is_unit() const { return valuation_floor() == 0; }

    PadicScalar truncated(int prec) const;  // prec must not exceed the current one

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator-() const;

    PadicScalar unit_inverse() const;       // throws unless a unit
    PadicScalar mul_pow_p(int k) const;     // exact multiplication by p^k
    PadicScalar div_pow_p(int k) const;     // requires residue divisible by p^k

    bool congruent(const PadicScalar& o, int digits) const;
    std::string str() const;

    static PadicScalar from_rat(const Int& p, int prec, const Rat& q);  // p-integral q

   private:
    void check_compatible(const PadicScalar& o) const;
    Int p_;
    int prec_;
    Int residue_;
};

/* exp(x) mod p^N for the exact integer x; requires v_p(x) >= 1 (>= 2 when
 * p = 2). The series is truncated at the first index whose tail bound
 * n v(x) - v_p(n!) clears N. */
Int padic_exp_int(const Int& p, const Int& x, int N);

/* log(u) mod p^N for the exact integer u with v_p(u-1) >= 1 (>= 2 for p=2). */
Int padic_log_int(const Int& p, const Int& u, int N);

PadicScalar padic_exp(const PadicScalar& x);
PadicScalar padic_log(const PadicScalar& u);

/* Reduce a p-integral rational mod p^N; throws on negative valuation. */
Int rat_mod(const Rat& q, const Int& p, int N);

int factorial_valuation(const Int& p, int n);  // v_p(n!)

}  // namespace liecoh

#endif
