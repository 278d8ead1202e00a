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

#ifndef LIECOH_POLY_HPP
#define LIECOH_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/* Univariate polynomial over the rationals, coefficients stored
 * lowest-degree-first with a nonzero leading coefficient (empty vector is
 * the zero polynomial). */
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { prune(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { prune(); }

    static Poly x();                          // the monomial X
    static Poly x_minus(const Rat& a);        // X - a
    static Poly constant(const Rat& a);
    static Poly x_power(int n);               // X^n

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;                   // 0 beyond the stored range
    Rat lc() const;                           // throws on zero polynomial
    bool is_monic() const { return !is_zero() && lc() == 1; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str() const;                  // human form, e.g. "X^2 - 2"

   private:
    void prune();
    std::vector<Rat> c_;
};

struct PolyDivRem {
    Poly quot;
    Poly rem;
};
PolyDivRem poly_divrem(const Poly& a, const Poly& b);  // b nonzero
Poly poly_gcd(const Poly& a, const Poly& b);           // monic unless both zero

struct PolyExtGcd {
    Poly g;  // monic gcd
    Poly a;  // Bezout coefficients: a*p + b*q = g
    Poly b;
};
PolyExtGcd poly_extgcd(const Poly& p, const Poly& q);

Poly poly_pow(const Poly& p, unsigned e);

/* Scale to an integer-coefficient polynomial with content 1 and positive
 * leading coefficient; returns the coefficient list lowest-first. */
std::vector<Int> primitive_integer_coeffs(const Poly& p);

bool poly_less(const Poly& a, const Poly& b);  // deterministic total order

}  // namespace liecoh

#endif
