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

#include "liecoh/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

PadicScalar::PadicScalar(Int p, int prec, Int value) : p_(std::move(p)), prec_(prec) {
    if (p_ < 2) throw std::invalid_argument("PadicScalar: prime must be at least 2");
    if (prec_ < 0) throw std::invalid_argument("PadicScalar: negative precision");
    residue_ = mod_reduce(value, modulus());
}

int PadicScalar::valuation_floor() const {
    if (residue_ == 0) return prec_;
    return std::min(valuation(residue_, p_), prec_);
}

PadicScalar PadicScalar::truncated(int prec) const {
    if (prec > prec_) throw std::invalid_argument("truncated: cannot raise precision");
    return PadicScalar(p_, prec, residue_);
}

void PadicScalar::check_compatible(const PadicScalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("PadicScalar: prime mismatch");
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_compatible(o);
    return PadicScalar(p_, std::min(prec_, o.prec_), residue_ + o.residue_);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const {
    check_compatible(o);
    return PadicScalar(p_, std::min(prec_, o.prec_), residue_ - o.residue_);
}

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_compatible(o);
    int prec = std::min(prec_ + o.valuation_floor(), o.prec_ + valuation_floor());
    return PadicScalar(p_, prec, residue_ * o.residue_);
}

PadicScalar PadicScalar::operator-() const { return PadicScalar(p_, prec_, -residue_); }

PadicScalar PadicScalar::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("unit_inverse: not a unit");
    return PadicScalar(p_, prec_, mod_inverse(residue_, modulus()));
}

PadicScalar PadicScalar::mul_pow_p(int k) const {
    return PadicScalar(p_, prec_ + k, residue_ * ipow(p_, k));
}

PadicScalar PadicScalar::div_pow_p(int k) const {
    if (k > prec_) throw std::domain_error("div_pow_p: precision exhausted");
    Int pk = ipow(p_, k);
    if (residue_ % pk != 0) throw std::domain_error("div_pow_p: residue not divisible");
    return PadicScalar(p_, prec_ - k, residue_ / pk);
}

bool PadicScalar::congruent(const PadicScalar& o, int digits) const {
    if (p_ != o.p_) return false;
    if (digits > prec_ || digits > o.prec_) return false;
    Int m = ipow(p_, digits);
    return mod_reduce(residue_, m) == mod_reduce(o.residue_, m);
}

std::string PadicScalar::str() const {
    return residue_.str() + " + O(" + p_.str() + "^" + std::to_string(prec_) + ")";
}

PadicScalar PadicScalar::from_rat(const Int& p, int prec, const Rat& q) {
    return PadicScalar(p, prec, rat_mod(q, p, prec));
}

Int rat_mod(const Rat& q, const Int& p, int N) {
    Int m = ipow(p, N);
    Int den = mod_reduce(rat_den(q), m);
    return mod_reduce(rat_num(q) * mod_inverse(den, m), m);
}

int factorial_valuation(const Int& p, int n) {
    int v = 0;
    Int pk = p;
    while (pk <= n) {
        v += Int(Int(n) / pk).convert_to<int>();
        pk *= p;
    }
    return v;
}

namespace {

int exp_domain_valuation(const Int& p) { return p == 2 ? 2 : 1; }

/* First index from which every series tail term is divisible by p^N, using
 * the increasing envelope n*v - (n-1)/(p-1) <= n*v - v_p(n!). */
int series_truncation(const Int& p, int v, int N) {
    Rat pm1(p - 1);
    for (int n = 1;; ++n) {
        if (Rat(n) * v - Rat(n - 1) / pm1 >= N) return n;
    }
}

}  // namespace

Int padic_exp_int(const Int& p, const Int& x, int N) {
    if (N <= 0) return 0;
    if (x == 0) return mod_reduce(1, ipow(p, N));
    int v = valuation(x, p);
    if (v < exp_domain_valuation(p)) throw std::domain_error("outside exp domain");
    int n0 = series_truncation(p, v, N);
    Rat sum = 1, term = 1;
    for (int n = 1; n < n0; ++n) {
        term = term * Rat(x) / Rat(n);
        sum += term;
    }
    return rat_mod(sum, p, N);
}

Int padic_log_int(const Int& p, const Int& u, int N) {
    if (N <= 0) return 0;
    Int w = u - 1;
    if (w == 0) return 0;
    int v = valuation(w, p);
    if (v < exp_domain_valuation(p)) throw std::domain_error("outside log domain");
    int n0 = series_truncation(p, v, N);
    Rat sum = 0, power = 1;
    for (int n = 1; n < n0; ++n) {
        power = power * Rat(w);
        Rat term = power / Rat(n);
        sum += (n % 2 == 1) ? term : -term;
    }
    return rat_mod(sum, p, N);
}

PadicScalar padic_exp(const PadicScalar& x) {
    return PadicScalar(x.prime(), x.prec(), padic_exp_int(x.prime(), x.residue(), x.prec()));
}

PadicScalar padic_log(const PadicScalar& u) {
    return PadicScalar(u.prime(), u.prec(), padic_log_int(u.prime(), u.residue(), u.prec()));
}

}  // namespace liecoh
