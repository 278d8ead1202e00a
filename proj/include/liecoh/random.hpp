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

#ifndef LIECOH_RANDOM_HPP
#define LIECOH_RANDOM_HPP

#include <cstdint>

#include "liecoh/group.hpp"
#include "liecoh/lie.hpp"

namespace liecoh {

/* splitmix64; the seeded verification suites need identical streams across
 * platforms, so no <random> distributions anywhere. */
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long long range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Rat random_rat(Rng& rng, long long mag) {
    return Rat(rng.range(-mag, mag), rng.range(1, mag));
}

inline Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols, long long mag) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rat(rng, mag);
    return m;
}

/* Identity sheared by a handful of integer row operations; exactly invertible. */
inline Mat random_invertible(Rng& rng, std::size_t n, long long mag = 3) {
    Mat s = Mat::identity(n);
    for (std::size_t ops = 0; ops < 2 * n + 2; ++ops) {
        std::size_t i = rng.range(0, n - 1), j = rng.range(0, n - 1);
        if (i == j) continue;
        Rat f = Rat(rng.range(-mag, mag));
        for (std::size_t k = 0; k < n; ++k) s.at(i, k) += f * s.at(j, k);
    }
    return s;
}

inline LieRep random_block_rep(Rng& rng, int d) {
    switch (rng.range(0, 6)) {
        case 0: return standard_rep(d, Poly::x_minus(Rat(rng.range(-2, 3))));
        case 1: return standard_rep(d, Poly{Rat(rng.range(1, 3)), Rat(0), Rat(1)});
        case 2: return standard_rep(d, Poly{Rat(-1), Rat(-1), Rat(1)});
        case 3: return standard_rep(d, Poly::x_power(static_cast<int>(rng.range(2, 3))));
        case 4: return logchi_extension_rep(d);
        case 5: return sj_extension_rep(d, static_cast<int>(rng.range(1, d)));
        default: return trivial_rep(d);
    }
}

/* Random valid representation: sums and tensor products of library blocks,
 * conjugated by a random invertible matrix. */
inline LieRep random_rep(Rng& rng, int d, std::size_t max_dim) {
    LieRep rep = random_block_rep(rng, d);
    while (rep.dim() < max_dim && rng.range(0, 2) != 0) {
        LieRep next = random_block_rep(rng, d);
        if (rng.range(0, 3) == 0 && rep.dim() * next.dim() <= max_dim)
            rep = tensor(rep, next);
        else if (rep.dim() + next.dim() <= max_dim)
            rep = direct_sum(rep, next);
        else
            break;
    }
    return conjugate(rep, random_invertible(rng, rep.dim()));
}

inline Int random_int_mod(Rng& rng, const Int& m) {
    Int r = 0, bound = 1;
    while (bound < m) {
        r = (r << 32) + rng.range(0, (1LL << 32) - 1);
        bound <<= 32;
    }
    return mod_reduce(r, m);
}

inline GroupElement random_group_element(Rng& rng, const PadicParams& pp, int d, int prec) {
    Int m = ipow(pp.p, prec);
    PadicScalar u(pp.p, prec, 1 + pp.two_pc() * random_int_mod(rng, m));
    std::vector<PadicScalar> z;
    for (int j = 0; j < d; ++j) z.emplace_back(pp.p, prec, random_int_mod(rng, m));
    return GroupElement(pp, std::move(u), std::move(z));
}

inline AlgebraElement random_algebra_element(Rng& rng, const PadicParams& pp, int d, int prec) {
    Int m = ipow(pp.p, prec);
    PadicScalar a(pp.p, prec, pp.two_pc() * random_int_mod(rng, m));
    std::vector<PadicScalar> b;
    for (int j = 0; j < d; ++j) b.emplace_back(pp.p, prec, random_int_mod(rng, m));
    return AlgebraElement(pp, std::move(a), std::move(b));
}

}  // namespace liecoh

#endif
