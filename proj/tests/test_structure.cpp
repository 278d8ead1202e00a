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

#include <algorithm>

#include "liecoh/cohomology.hpp"
#include "liecoh/structure.hpp"
#include "support.hpp"

using namespace liecoh;
using liecoh::testing::Rng;

namespace {

bool has_factor(const LengthVector& lv, const Poly& p, int mult) {
    for (const auto& [f, m] : lv.factors)
        if (f == p && m == mult) return true;
    return false;
}

LieRep diag_rep(int d, std::vector<Rat> eigenvalues) {
    std::size_t n = eigenvalues.size();
    std::vector<Mat> action(d + 1, Mat::zero(n, n));
    for (std::size_t i = 0; i < n; ++i) action[0].at(i, i) = eigenvalues[i];
    return LieRep(d, std::move(action));
}

}  // namespace

TEST_CASE("length of a direct sum is the multiset union") {
    LieRep rep = direct_sum(standard_rep(2, Poly::x_minus(Rat(1))), trivial_rep(2));
    auto lv = length(rep);
    REQUIRE(lv.factors.size() == 2);
    CHECK(has_factor(lv, Poly::x(), 1));
    CHECK(has_factor(lv, Poly::x_minus(Rat(1)), 1));
}

TEST_CASE("length of the nilpotent 2-dim representation") {
    auto lv = length(logchi_extension_rep(1));
    REQUIRE(lv.factors.size() == 1);
    CHECK(has_factor(lv, Poly::x(), 2));
}

TEST_CASE("length of K[X0]/(X0^2-2)") {
    auto lv = length(standard_rep(1, Poly{Rat(-2), Rat(0), Rat(1)}));
    REQUIRE(lv.factors.size() == 1);
    CHECK(has_factor(lv, Poly{Rat(-2), Rat(0), Rat(1)}, 1));
}

TEST_CASE("length is additive and conjugation invariant") {
    Rng rng(301);
    for (int trial = 0; trial < 10; ++trial) {
        int d = static_cast<int>(rng.range(1, 3));
        LieRep a = testing::random_rep(rng, d, 4);
        LieRep b = testing::random_rep(rng, d, 4);
        auto la = length(a), lb = length(b), lsum = length(direct_sum(a, b));
        std::size_t total = 0;
        for (const auto& [f, m] : lsum.factors) {
            int ma = 0, mb = 0;
            for (const auto& [g, k] : la.factors)
                if (g == f) ma = k;
            for (const auto& [g, k] : lb.factors)
                if (g == f) mb = k;
            CHECK(m == ma + mb);
            total += static_cast<std::size_t>(m) * f.degree();
        }
        CHECK(total == a.dim() + b.dim());
        if (a.dim() > 0) {
            LieRep conj = conjugate(a, testing::random_invertible(rng, a.dim()));
            CHECK(length(conj).factors == la.factors);
        }
    }
}

TEST_CASE("z_split of a diagonal mixed-spectrum representation") {
    auto split = z_split(diag_rep(1, {Rat(0), Rat(1, 2)}));
    CHECK(split.z_part.dim() == 1);
    CHECK(split.zprime_part.dim() == 1);
    CHECK(split.z_part.action(0).is_zero());
    CHECK(split.zprime_part.action(0).at(0, 0) == Rat(1, 2));
}

TEST_CASE("z_split of an irrational block is all zprime") {
    auto split = z_split(standard_rep(1, Poly{Rat(-2), Rat(0), Rat(1)}));
    CHECK(split.z_part.dim() == 0);
    CHECK(split.zprime_part.dim() == 2);
}

TEST_CASE("z_split of the s_j extension is all integer part") {
    auto split = z_split(sj_extension_rep(2, 1));
    CHECK(split.z_part.dim() == 2);
    CHECK(split.zprime_part.dim() == 0);
}

TEST_CASE("z_split parts are stable, recover the rep, and split the spectrum") {
    Rng rng(307);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.range(1, 3));
        LieRep rep = testing::random_rep(rng, d, 6);
        auto split = z_split(rep);
        CHECK(split.z_part.dim() + split.zprime_part.dim() == rep.dim());
        CHECK(validate(split.z_part).ok);
        CHECK(validate(split.zprime_part).ok);
        CHECK(intertwines(split.inclusion_z));
        CHECK(intertwines(split.inclusion_zprime));
        Mat both = hstack(split.inclusion_z.matrix, split.inclusion_zprime.matrix);
        CHECK(rank(both) == rep.dim());
        if (split.z_part.dim() > 0) {
            auto roots = integer_roots(char_poly(split.z_part.action(0)));
            std::size_t total = 0;
            for (const auto& [r, m] : roots) total += m;
            CHECK(total == split.z_part.dim());
        }
        if (split.zprime_part.dim() > 0)
            CHECK(integer_roots(char_poly(split.zprime_part.action(0))).empty());
    }
}

TEST_CASE("z_split is functorial along intertwiners") {
    Rng rng(311);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 20; ++trial) {
        int d = static_cast<int>(rng.range(1, 2));
        LieRep shared = testing::random_rep(rng, d, 3);
        if (shared.dim() == 0) continue;
        LieRep a = direct_sum(shared, testing::random_rep(rng, d, 2));
        LieRep b = direct_sum(testing::random_rep(rng, d, 2), shared);
        auto basis = intertwiner_space(a, b);
        if (basis.empty()) continue;
        Mat f = Mat::zero(b.dim(), a.dim());
        for (const Mat& h : basis) f = f + h * Rat(rng.range(-3, 3));
        REQUIRE(intertwines(RepMorphism{a, b, f}));
        auto sa = z_split(a), sb = z_split(b);
        CHECK(testing::contained_in_span(sb.inclusion_z.matrix, f * sa.inclusion_z.matrix));
        CHECK(testing::contained_in_span(sb.inclusion_zprime.matrix,
                                         f * sa.inclusion_zprime.matrix));
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("Ext-orthogonality between integer and non-integer classes") {
    std::vector<Poly> betas{Poly::x_minus(Rat(1, 2)),
                            Poly{Rat(-2), Rat(0), Rat(1)},
                            Poly{Rat(1), Rat(0), Rat(1)},
                            Poly{Rat(-1), Rat(-1), Rat(1)}};
    for (int d = 1; d <= 2; ++d)
        for (int alpha = -1; alpha <= 2; ++alpha)
            for (const Poly& beta : betas) {
                LieRep za = standard_rep(d, Poly::x_minus(Rat(alpha)));
                LieRep zb = standard_rep(d, beta);
                for (const LieRep& h : {hom_rep(za, zb), hom_rep(zb, za)}) {
                    auto dims = cohomology(h, Subalgebra::full).dims;
                    CHECK(dims[0] == 0);
                    CHECK(dims[1] == 0);
                }
            }
}

TEST_CASE("unipotent structure of basic blocks") {
    CHECK(unipotent_structure(trivial_rep(2)).block_sizes == std::vector<int>{1});
    CHECK(unipotent_structure(logchi_extension_rep(1)).block_sizes == std::vector<int>{2});
    CHECK_THROWS_WITH(unipotent_structure(standard_rep(1, Poly::x_minus(Rat(1)))),
                      "not supported on Z*0");
}

TEST_CASE("unipotent structure recovers block sizes of random conjugates") {
    Rng rng(313);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.range(1, 3));
        std::vector<int> sizes;
        LieRep rep = zero_rep(d);
        std::size_t total = 0;
        while (total < 6 && (sizes.empty() || rng.range(0, 1) == 0)) {
            int r = static_cast<int>(rng.range(1, 3));
            sizes.push_back(r);
            rep = direct_sum(rep, standard_rep(d, Poly::x_power(r)));
            total += r;
        }
        std::sort(sizes.rbegin(), sizes.rend());
        LieRep conj = conjugate(rep, testing::random_invertible(rng, rep.dim()));
        auto us = unipotent_structure(conj);
        CHECK(us.block_sizes == sizes);
        CHECK(us.geom_action_zero);
        CHECK(intertwines(us.witness));
        CHECK(inverse(us.witness.matrix).has_value());
        for (int j = 1; j <= d; ++j) CHECK(us.canonical.action(j).is_zero());
    }
}

TEST_CASE("irreducibility: irreducible companion blocks") {
    CHECK(irreducible_test(standard_rep(2, Poly{Rat(1), Rat(0), Rat(1)})).irreducible);
    CHECK(irreducible_test(trivial_rep(1)).irreducible);
}

TEST_CASE("irreducibility: the s_j extension has the line it fixes") {
    auto res = irreducible_test(sj_extension_rep(2, 1));
    CHECK(!res.irreducible);
    REQUIRE(res.invariant_subspace.cols() == 1);
    CHECK(res.invariant_subspace.at(0, 0) == Rat(1));
    CHECK(res.invariant_subspace.at(1, 0) == Rat(0));
}

TEST_CASE("irreducibility witnesses are proper, nonzero, invariant") {
    Rng rng(317);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.range(1, 3));
        LieRep rep = testing::random_rep(rng, d, 5);
        if (rep.dim() == 0) continue;
        auto res = irreducible_test(rep);
        if (res.irreducible) {
            auto factors = factor_rationals(char_poly(rep.action(0))).factors;
            CHECK(factors.size() == 1);
            CHECK(factors[0].second == 1);
        } else {
            const Mat& w = res.invariant_subspace;
            REQUIRE(w.cols() > 0);
            CHECK(rank(w) == w.cols());
            CHECK(w.cols() < rep.dim());
            for (int i = 0; i <= d; ++i)
                CHECK(testing::contained_in_span(w, rep.action(i) * w));
        }
    }
}
