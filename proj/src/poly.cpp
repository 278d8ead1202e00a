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

#include "liecoh/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

void Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::x_minus(const Rat& a) { return Poly{-a, Rat(1)}; }

Poly Poly::constant(const Rat& a) { return Poly{a}; }

Poly Poly::x_power(int n) {
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    return Poly(std::move(c));
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

Rat Poly::lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(Int(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rat c = c_[i];
        if (c == 0) continue;
        bool first = out.empty();
        if (c < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        bool unit = (c == 1 && i > 0);
        if (!unit) out += rat_str(c);
        if (i > 0) {
            if (!unit) out += "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

PolyDivRem poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rat> quot(a.degree() - db + 1);
    Rat lb = b.lc();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / lb;
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = poly_divrem(r0, r1).rem;
        r0 = r1;
        r1 = r2;
    }
    return r0.monic();
}

PolyExtGcd poly_extgcd(const Poly& p, const Poly& q) {
    Poly r0 = p, r1 = q;
    Poly a0 = Poly::constant(1), a1;
    Poly b0, b1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [quo, rem] = poly_divrem(r0, r1);
        Poly a2 = a0 - quo * a1;
        Poly b2 = b0 - quo * b1;
        r0 = r1; r1 = rem;
        a0 = a1; a1 = a2;
        b0 = b1; b1 = b2;
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rat s = Rat(1) / r0.lc();
    return {r0 * s, a0 * s, b0 * s};
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly r = Poly::constant(1);
    Poly base = p;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::vector<Int> primitive_integer_coeffs(const Poly& p) {
    if (p.is_zero()) return {};
    Int den = 1;
    for (const Rat& c : p.coeffs()) den = lcm(den, rat_den(c));
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    Int content = 0;
    for (const Rat& c : p.coeffs()) {
        Int v = rat_num(c) * (den / rat_den(c));
        out.push_back(v);
        content = gcd(content, v);
    }
    if (out.back() < 0) content = -content;
    for (Int& v : out) v /= content;
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

}  // namespace liecoh
