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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecoh/factor.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/poly.hpp"
#include "support.hpp"

using namespace liecoh;
using liecoh::testing::Rng;

namespace {

Poly P(std::initializer_list<long long> lowest_first) {
    std::vector<Rat> c;
    for (long long v : lowest_first) c.emplace_back(v);
    return Poly(std::move(c));
}

Mat M2(long long a, long long b, long long c, long long d) {
    Mat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
    CHECK(rat_parse("22/7") == Rat(22, 7));
    CHECK(rat_parse("-9") == Rat(-9));
    CHECK(rat_parse("4/6") == Rat(2, 3));
    CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("rank_kernel: identity") {
    auto rk = rank_kernel(Mat::identity(2));
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.cols() == 0);
}

TEST_CASE("rank_kernel: zero map") {
    auto rk = rank_kernel(Mat::zero(2, 2));
    CHECK(rk.rank == 0);
    REQUIRE(rk.kernel.cols() == 2);
    CHECK(rk.kernel == Mat::identity(2));
}

TEST_CASE("rank_kernel: rank-one matrix, cross-checked") {
    Mat m = M2(1, 2, 2, 4);
    auto rk = rank_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.cols() == 1);
    CHECK(rk.kernel.at(0, 0) == Rat(-2));
    CHECK(rk.kernel.at(1, 0) == Rat(1));
    CHECK((m * rk.kernel).is_zero());  // direct substitution
    auto oracle = testing::bareiss_rank_kernel(m);  // second elimination strategy
    CHECK(oracle.rank == 1);
    CHECK(testing::same_span(rk.kernel, oracle.kernel));
}

TEST_CASE("two elimination strategies agree on random matrices") {
    Rng rng(20260810);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = rng.range(1, 12), cols = rng.range(1, 12);
        Mat m = testing::random_mat(rng, rows, cols, 1000);
        auto a = rank_kernel(m);
        auto b = testing::bareiss_rank_kernel(m);
        REQUIRE(a.rank == b.rank);
        REQUIRE(a.rank + a.kernel.cols() == cols);
        CHECK((m * a.kernel).is_zero());
        CHECK((m * b.kernel).is_zero());
        CHECK(testing::same_span(a.kernel, b.kernel));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve_in_column_span and inverse") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = rng.range(1, 6);
        Mat s = testing::random_invertible(rng, n);
        auto inv = inverse(s);
        REQUIRE(inv.has_value());
        CHECK(*inv * s == Mat::identity(n));
        Mat y = s * testing::random_mat(rng, n, 2, 5);
        auto x = solve_in_column_span(s, y);
        REQUIRE(x.has_value());
        CHECK(s * *x == y);
    }
    // inconsistent system
    Mat z(2, 1);
    z.at(0, 0) = 1;
    Mat y(2, 1);
    y.at(1, 0) = 1;
    CHECK(!solve_in_column_span(z, y).has_value());
}

TEST_CASE("char_poly satisfies Cayley-Hamilton") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = rng.range(1, 5);
        Mat a = testing::random_mat(rng, n, n, 6);
        Poly chi = char_poly(a);
        CHECK(chi.degree() == static_cast<int>(n));
        CHECK(chi.is_monic());
        CHECK(mat_apply(chi, a).is_zero());
    }
    CHECK(char_poly(M2(0, 2, 1, 0)) == P({-2, 0, 1}));  // companion of X^2 - 2
}

TEST_CASE("poly divrem and gcd with Bezout witnesses") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> ac(rng.range(1, 6)), bc(rng.range(1, 6));
        for (auto& c : ac) c = testing::random_rat(rng, 6);
        for (auto& c : bc) c = testing::random_rat(rng, 6);
        Poly a(ac), b(bc);
        if (!b.is_zero()) {
            auto [q, r] = poly_divrem(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
        Poly g = poly_gcd(a, b);
        if (!g.is_zero()) {
            CHECK(poly_divrem(a, g).rem.is_zero());
            CHECK(poly_divrem(b, g).rem.is_zero());
        }
        auto e = poly_extgcd(a, b);
        CHECK(e.g == g);
        CHECK(e.a * a + e.b * b == g);
    }
}

TEST_CASE("squarefree_and_integer_roots: distinct roots") {
    auto r = squarefree_and_integer_roots(P({-1, 0, 1}));  // X^2 - 1
    CHECK(r.squarefree == P({-1, 0, 1}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair<Int, int>(-1, 1));
    CHECK(r.roots[1] == std::pair<Int, int>(1, 1));
}

TEST_CASE("squarefree_and_integer_roots: repeated root") {
    Poly p = poly_pow(P({-2, 1}), 3);  // (X-2)^3
    auto r = squarefree_and_integer_roots(p);
    CHECK(r.squarefree == P({-2, 1}));
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0] == std::pair<Int, int>(2, 3));
}

TEST_CASE("squarefree_and_integer_roots: X^2 - 2 has no integer roots") {
    Poly p = P({-2, 0, 1});
    // oracle: rational root theorem says candidates are the divisors of 2
    for (long long cand : {-2, -1, 1, 2}) CHECK(p.eval(Rat(cand)) != 0);
    auto r = squarefree_and_integer_roots(p);
    CHECK(r.squarefree == p);
    CHECK(r.roots.empty());
    CHECK_THROWS_WITH(squarefree_and_integer_roots(Poly()),
                      "zero polynomial has no root data");
}

TEST_CASE("factor_rationals: linear split") {
    auto f = factor_rationals(P({-1, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == P({-1, 1}));  // X - 1
    CHECK(f.factors[1].first == P({1, 1}));   // X + 1
    CHECK(f.factors[0].second == 1);
    CHECK(f.factors[1].second == 1);
}

TEST_CASE("factor_rationals: X^2 - 2 is irreducible") {
    // degree 2 with no rational root is irreducible; root candidates are
    // (divisors of 2)/(divisors of 1), all checked to miss
    Poly p = P({-2, 0, 1});
    for (long long cand : {-2, -1, 1, 2}) CHECK(p.eval(Rat(cand)) != 0);
    auto f = factor_rationals(p);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[0].second == 1);
}

TEST_CASE("factor_rationals: X^4 - 1 against brute-force factor pairs") {
    Poly p = P({-1, 0, 0, 0, 1});
    // oracle: enumerate monic integer divisors of degree 1 and 2 with
    // coefficients within the trivial bound |c| <= 2 and keep the monic
    // irreducible ones
    std::vector<Poly> expected;
    for (long long a = -2; a <= 2; ++a) {
        Poly lin = P({a, 1});
        if (poly_divrem(p, lin).rem.is_zero()) expected.push_back(lin);
    }
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b) {
            Poly quad = P({a, b, 1});
            if (!poly_divrem(p, quad).rem.is_zero()) continue;
            bool has_linear_factor = false;
            for (long long r = -2; r <= 2; ++r)
                if (quad.eval(Rat(r)) == 0) has_linear_factor = true;
            if (!has_linear_factor) expected.push_back(quad);
        }
    REQUIRE(expected.size() == 3);  // X-1, X+1, X^2+1

    auto f = factor_rationals(p);
    REQUIRE(f.factors.size() == 3);
    for (const Poly& e : expected) {
        bool found = false;
        for (const auto& [irr, mult] : f.factors)
            if (irr == e && mult == 1) found = true;
        CHECK(found);
    }
}

TEST_CASE("factor_rationals: degree bound and zero input") {
    CHECK_THROWS_WITH(factor_rationals(Poly::x_power(13)),
                      "factorization degree bound exceeded");
    CHECK_THROWS(factor_rationals(Poly()));
}

TEST_CASE("factor_rationals re-multiplies to the input") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        // random product of small factors, possibly repeated
        Poly p = Poly::constant(testing::random_rat(rng, 5) + Rat(7));
        int nf = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < nf; ++i) {
            long long kind = rng.range(0, 2);
            Poly f = kind == 0   ? Poly::x_minus(Rat(rng.range(-4, 4)))
                     : kind == 1 ? P({rng.range(1, 3), 0, 1})   // X^2 + c, irreducible
                                 : P({rng.range(-3, 3), rng.range(-2, 2), 1});
            int mult = static_cast<int>(rng.range(1, 2));
            p = p * poly_pow(f, mult);
        }
        if (p.degree() > kFactorDegreeBound) continue;
        auto f = factor_rationals(p);
        Poly prod = Poly::constant(p.lc());
        for (const auto& [irr, mult] : f.factors) {
            CHECK(irr.is_monic());
            prod = prod * poly_pow(irr, mult);
        }
        CHECK(prod == p);
    }
}
