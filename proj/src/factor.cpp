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

#include "liecoh/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace liecoh {

namespace {

Int eval_int(const std::vector<Int>& c, const Int& x) {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

/* All divisors of |n|, one sign or both, sorted by (|d|, d). */
std::vector<Int> divisors(const Int& n, bool both_signs) {
    Int m = abs(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d * d != m) large.push_back(m / d);
    }
    std::vector<Int> out;
    out.reserve(2 * (small.size() + large.size()));
    for (std::size_t i = 0, j = large.size(); i < small.size() + large.size(); ++i) {
        Int d = i < small.size() ? small[i] : large[--j];
        if (both_signs) out.push_back(-d);
        out.push_back(d);
    }
    if (both_signs) {  // interleave so |d| ascends: -1, 1, -2, 2, ...
        std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) {
            Int aa = abs(a), ab = abs(b);
            return aa != ab ? aa < ab : a < b;
        });
    }
    return out;
}

Int isqrt_ceil(const Int& n) {
    Int r = sqrt(n);
    while (r * r < n) ++r;
    return r;
}

/* Mignotte-style ceiling on coefficients of any integer factor of h. */
Int coefficient_bound(const std::vector<Int>& h, int k) {
    Int norm2 = 0;
    for (const Int& c : h) norm2 += c * c;
    return (Int(1) << k) * isqrt_ceil(norm2);
}

constexpr long kSearchLimit = 20'000'000;

/* Bounded search for an integer-coefficient factor of degree in [1, k]:
 * interpolate candidates through divisors of h at k+1 sample points, filter
 * by the Mignotte bound, confirm by exact division. h is primitive with no
 * rational roots, so no sample value vanishes. */
std::optional<Poly> kronecker_factor(const Poly& h, int k, long& budget) {
    std::vector<Int> hc = primitive_integer_coeffs(h);
    std::vector<Int> points, values;
    for (Int x = 0; static_cast<int>(points.size()) < k + 1; x = (x > 0 ? Int(-x) : Int(1 - x))) {
        Int v = eval_int(hc, x);
        if (v == 0) throw std::logic_error("unexpected root at sample point");
        points.push_back(x);
        values.push_back(v);
    }

    // Lagrange basis through the sample points
    std::vector<Poly> basis;
    for (int i = 0; i <= k; ++i) {
        Poly li = Poly::constant(1);
        Rat den = 1;
        for (int j = 0; j <= k; ++j) {
            if (j == i) continue;
            li = li * Poly::x_minus(Rat(points[j]));
            den *= Rat(points[i] - points[j]);
        }
        basis.push_back(li * (Rat(1) / den));
    }

    std::vector<std::vector<Int>> divs(k + 1);
    for (int i = 0; i <= k; ++i) divs[i] = divisors(values[i], i > 0);
    Int bound = coefficient_bound(hc, k);

    std::vector<std::size_t> idx(k + 1, 0);
    while (true) {
        if (--budget < 0) throw std::runtime_error("factorization search limit exceeded");
        Poly cand;
        for (int i = 0; i <= k; ++i) cand = cand + basis[i] * Rat(divs[i][idx[i]]);
        bool ok = cand.degree() >= 1;
        if (ok) {
            for (const Rat& c : cand.coeffs())
                if (!is_integer(c) || abs(rat_num(c)) > bound) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            auto [quo, rem] = poly_divrem(h, cand);
            if (rem.is_zero()) return cand;
        }
        int pos = k;
        while (pos >= 0 && ++idx[pos] == divs[pos].size()) idx[pos--] = 0;
        if (pos < 0) return std::nullopt;
    }
}

/* Rational roots of a nonconstant polynomial by the rational root theorem. */
std::vector<Rat> rational_roots(const Poly& p) {
    std::vector<Int> g = primitive_integer_coeffs(p);
    std::vector<Rat> roots;
    if (g.front() == 0) {
        roots.push_back(Rat(0));
        std::size_t k = 0;
        while (k < g.size() && g[k] == 0) ++k;
        g.erase(g.begin(), g.begin() + k);
    }
    if (g.size() < 2) return roots;
    for (const Int& a : divisors(g.front(), true))
        for (const Int& b : divisors(g.back(), false)) {
            if (gcd(abs(a), b) != 1) continue;
            Rat r(a, b);
            if (p.eval(r) == 0) roots.push_back(r);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/* Monic irreducible factors of a squarefree nonconstant polynomial. */
std::vector<Poly> factor_squarefree(Poly h) {
    std::vector<Poly> out;
    for (const Rat& r : rational_roots(h)) {
        out.push_back(Poly::x_minus(r));
        h = poly_divrem(h, out.back()).quot;
    }
    long budget = kSearchLimit;
    int k = 2;
    while (2 * k <= h.degree()) {
        if (auto f = kronecker_factor(h, k, budget)) {
            out.push_back(f->monic());
            h = poly_divrem(h, *f).quot;
        } else {
            ++k;
        }
    }
    if (h.degree() >= 1) out.push_back(h.monic());
    return out;
}

/* Yun's squarefree decomposition of a monic polynomial. */
std::vector<std::pair<Poly, int>> yun_squarefree(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    Poly dp = p.derivative();
    Poly a = poly_gcd(p, dp);
    Poly b = poly_divrem(p, a).quot;
    Poly c = poly_divrem(dp, a).quot - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly d = poly_gcd(b, c);
        if (d.degree() > 0) out.emplace_back(d, i);
        b = poly_divrem(b, d).quot;
        c = poly_divrem(c, d).quot - b.derivative();
    }
    return out;
}

}  // namespace

std::vector<std::pair<Int, int>> integer_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root data");
    std::vector<std::pair<Int, int>> out;
    Poly g = p;
    int at_zero = 0;
    while (g.coeff(0) == 0 && g.degree() > 0) {
        std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = Poly(std::move(shifted));
        ++at_zero;
    }
    std::vector<std::pair<Int, int>> found;
    if (g.degree() > 0) {
        std::vector<Int> gi = primitive_integer_coeffs(g);
        for (const Int& r : divisors(gi.front(), true)) {
            int mult = 0;
            while (!g.is_zero() && g.eval(Rat(r)) == 0) {
                g = poly_divrem(g, Poly::x_minus(Rat(r))).quot;
                ++mult;
            }
            if (mult > 0) found.emplace_back(r, mult);
        }
    }
    if (at_zero > 0) found.emplace_back(0, at_zero);
    std::sort(found.begin(), found.end());
    return found;
}

SquarefreeRoots squarefree_and_integer_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no root data");
    SquarefreeRoots out;
    if (p.degree() == 0) {
        out.squarefree = Poly::constant(1);
        return out;
    }
    Poly g = poly_gcd(p, p.derivative());
    out.squarefree = poly_divrem(p, g).quot.monic();
    out.roots = integer_roots(p);
    return out;
}

Factorization factor_rationals(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (p.degree() > kFactorDegreeBound)
        throw std::invalid_argument("factorization degree bound exceeded");
    std::map<std::vector<Rat>, int> acc;
    if (p.degree() >= 1) {
        for (const auto& [part, mult] : yun_squarefree(p.monic()))
            for (const Poly& f : factor_squarefree(part)) acc[f.coeffs()] += mult;
    }
    Factorization out;
    for (const auto& [coeffs, mult] : acc) out.factors.emplace_back(Poly(coeffs), mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

}  // namespace liecoh
