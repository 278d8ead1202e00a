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

#include "liecoh/group.hpp"
#include "liecoh/padic.hpp"
#include "support.hpp"

using namespace liecoh;
using liecoh::testing::Rng;

namespace {

bool algebra_congruent(const AlgebraElement& x, const AlgebraElement& y, int digits) {
    if (!x.a.congruent(y.a, digits)) return false;
    for (int j = 0; j < x.d(); ++j)
        if (!x.b[j].congruent(y.b[j], digits)) return false;
    return true;
}

bool group_congruent(const GroupElement& g, const GroupElement& h, int digits) {
    if (!g.u.congruent(h.u, digits)) return false;
    for (int j = 0; j < g.d(); ++j)
        if (!g.z[j].congruent(h.z[j], digits)) return false;
    return true;
}

}  // namespace

TEST_CASE("PadicScalar arithmetic and precision tracking") {
    PadicScalar a(3, 5, 100);  // 100 mod 243
    CHECK(a.residue() == 100);
    CHECK(a.valuation_floor() == 0);
    PadicScalar b(3, 3, 9);
    CHECK(b.valuation_floor() == 2);
    CHECK((a + b).prec() == 3);
    CHECK((a * b).prec() == 3);  // min(5 + 2, 3 + 0)
    CHECK((a * b).residue() == mod_reduce(Int(900), ipow(3, 3)));
    CHECK((b * b).prec() == 5);  // each factor contributes valuation 2
    CHECK(PadicScalar(3, 4, 0).valuation_floor() == 4);
    PadicScalar u(5, 6, 7);
    CHECK((u * u.unit_inverse()).residue() == 1);
    CHECK_THROWS(PadicScalar(5, 3, 5).unit_inverse());
    CHECK(PadicScalar(5, 4, 50).div_pow_p(1).residue() == 10);
    CHECK(PadicScalar(5, 4, 50).div_pow_p(1).prec() == 3);
    CHECK_THROWS(PadicScalar(5, 4, 3).div_pow_p(1));
    CHECK(a.truncated(2).residue() == mod_reduce(Int(100), Int(9)));
}

TEST_CASE("scalar exp and log invert each other") {
    Rng rng(401);
    for (Int p : {Int(3), Int(5)}) {
        int N = 15;
        Int m = ipow(p, N);
        for (int trial = 0; trial < 20; ++trial) {
            Int x = p * random_int_mod(rng, m / p);
            Int u = mod_reduce(padic_exp_int(p, x, N), m);
            CHECK(valuation(u - 1 == 0 ? Int(1) : Int(u - 1), p) >= (u == 1 ? 0 : 1));
            CHECK(padic_log_int(p, u, N) == mod_reduce(x, m));
            Int w = 1 + p * random_int_mod(rng, m / p);
            CHECK(padic_exp_int(p, padic_log_int(p, w, N), N) == mod_reduce(w, m));
        }
    }
    CHECK_THROWS_WITH(padic_exp_int(3, 1, 10), "outside exp domain");
}

TEST_CASE("group multiplication against the matrix realization") {
    Rng rng(409);
    PadicParams pp(5, 1);
    int d = 2, N = 12;
    GroupElement e = group_identity(pp, d, N);
    for (int trial = 0; trial < 20; ++trial) {
        GroupElement g = random_group_element(rng, pp, d, N);
        GroupElement h = random_group_element(rng, pp, d, N);
        CHECK(group_congruent(group_mul(g, e), g, N));
        GroupElement gh = group_mul(g, h);
        PadicMat prod = padic_mat_mul(group_matrix(g), group_matrix(h));
        CHECK(padic_mat_congruent(prod, group_matrix(gh), N));
        CHECK(group_congruent(group_mul(g, group_inv(g)), e, N));
    }
    CHECK_THROWS(group_mul(e, group_identity(PadicParams(3, 1), d, N)));
    CHECK_THROWS(group_mul(e, group_identity(pp, 1, N)));
}

TEST_CASE("conjugating a geometric generator scales it by the unit") {
    // (u, 0)(1, e_j)(u, 0)^{-1} = (1, u e_j), checked in coordinates and as
    // a product of three matrices
    PadicParams pp(3, 1);
    int d = 2, N = 10;
    Rng rng(419);
    GroupElement t = random_group_element(rng, pp, d, N);
    std::vector<PadicScalar> zero(d, PadicScalar(pp.p, N, 0));
    GroupElement arith(pp, t.u, zero);
    GroupElement rj = generator_r(pp, d, 1, N);
    GroupElement conj = group_mul(group_mul(arith, rj), group_inv(arith));
    CHECK(conj.u.congruent(PadicScalar(pp.p, N, 1), N));
    CHECK(conj.z[0].congruent(arith.u, N - 0));
    CHECK(conj.z[1].congruent(PadicScalar(pp.p, N, 0), N));
    PadicMat three = padic_mat_mul(group_matrix(arith),
                                   padic_mat_mul(group_matrix(rj), group_matrix(group_inv(arith))));
    CHECK(padic_mat_congruent(three, group_matrix(conj), N - 0));
}

TEST_CASE("r_0 and r_1 fail to commute exactly by the semidirect twist") {
    PadicParams pp(3, 1);
    int d = 1, N = 12;
    GroupElement r0 = generator_r(pp, d, 0, N);
    GroupElement r1 = generator_r(pp, d, 1, N);
    GroupElement a = group_mul(r0, r1);
    GroupElement b = group_mul(r1, r0);
    CHECK(a.u.congruent(b.u, N));
    CHECK(a.z[0].congruent(r0.u, N));  // u_0 * 1
    CHECK(b.z[0].congruent(PadicScalar(pp.p, N, 1), N));
}

TEST_CASE("mat_exp of zero and of the geometric generators") {
    PadicParams pp(3, 1);
    int d = 2, N = 14;
    PadicScalar zero(pp.p, N, 0);
    AlgebraElement z(pp, zero, {zero, zero});
    CHECK(group_congruent(mat_exp(z), group_identity(pp, d, N), N));
    AlgebraElement xj = algebra_x(pp, d, 1, N);
    GroupElement rj = mat_exp(xj);
    CHECK(rj.u.residue() == 1);     // exact: the series terminates at degree 2
    CHECK(rj.z[0].residue() == 1);
    CHECK(rj.z[1].residue() == 0);
    AlgebraElement back = mat_log(group_identity(pp, d, N));
    CHECK(back.a.residue() == 0);
    CHECK(back.b[0].residue() == 0);
}

TEST_CASE("mat_exp(6 X_0) at p = 3 matches the scalar series and mat_log inverts it") {
    PadicParams pp(3, 1);
    int d = 1, N = 10;
    PadicScalar six(pp.p, N, 6), zero(pp.p, N, 0);
    GroupElement g = mat_exp(AlgebraElement(pp, six, {zero}));
    CHECK(g.u.residue() == padic_exp_int(3, 6, N));
    CHECK(g.z[0].residue() == 0);
    AlgebraElement back = mat_log(g);
    CHECK(back.a.congruent(six, N));
    CHECK(back.b[0].congruent(zero, N));
    CHECK_THROWS_WITH(mat_exp(AlgebraElement(pp, PadicScalar(pp.p, N, 1), {zero})),
                      "outside exp domain");
}

TEST_CASE("exp/log round trips on random domain elements") {
    Rng rng(421);
    for (Int p : {Int(3), Int(5)}) {
        PadicParams pp(p, 1);
        int N = 20;
        for (int trial = 0; trial < 25; ++trial) {
            int d = static_cast<int>(rng.range(1, 3));
            AlgebraElement x = random_algebra_element(rng, pp, d, N);
            CHECK(algebra_congruent(mat_log(mat_exp(x)), x, N));
            GroupElement g = random_group_element(rng, pp, d, N);
            CHECK(group_congruent(mat_exp(mat_log(g)), g, N));
        }
    }
}

TEST_CASE("one-parameter homomorphism property of mat_exp") {
    Rng rng(431);
    PadicParams pp(3, 1);
    int d = 2, N = 16;
    Int m = ipow(pp.p, N);
    for (int trial = 0; trial < 10; ++trial) {
        AlgebraElement x = random_algebra_element(rng, pp, d, N);
        Int s = random_int_mod(rng, m), t = random_int_mod(rng, m);
        auto scale = [&](const Int& c) {
            std::vector<PadicScalar> b;
            for (const PadicScalar& v : x.b) b.push_back(v * PadicScalar(pp.p, N, c));
            return AlgebraElement(pp, x.a * PadicScalar(pp.p, N, c), std::move(b));
        };
        GroupElement lhs = mat_exp(scale(s + t));
        GroupElement rhs = group_mul(mat_exp(scale(s)), mat_exp(scale(t)));
        CHECK(group_congruent(lhs, rhs, N));
    }
}

TEST_CASE("cocycle values on the generators") {
    PadicParams pp(3, 1);
    int d = 3, N = 12;
    GroupElement e = group_identity(pp, d, N);
    CHECK(cocycle_logchi(e).residue() == 0);
    CHECK(cocycle_s(1, e).residue() == 0);
    for (int j = 1; j <= d; ++j) {
        GroupElement rj = generator_r(pp, d, j, N);
        for (int k = 1; k <= d; ++k)
            CHECK(cocycle_s(k, rj).residue() == (k == j ? 1 : 0));
        CHECK(cocycle_logchi(rj).residue() == 0);
    }
}

TEST_CASE("cocycle laws: log chi additive, s_j twisted") {
    Rng rng(433);
    for (Int p : {Int(3), Int(5)}) {
        PadicParams pp(p, 1);
        int N = 12, d = 2;
        for (int trial = 0; trial < 25; ++trial) {
            GroupElement g = random_group_element(rng, pp, d, N);
            GroupElement h = random_group_element(rng, pp, d, N);
            GroupElement gh = group_mul(g, h);
            CHECK(cocycle_logchi(gh).congruent(cocycle_logchi(g) + cocycle_logchi(h), N));
            for (int j = 1; j <= d; ++j) {
                PadicScalar rhs = cocycle_s(j, g) + g.u * cocycle_s(j, h);
                CHECK(cocycle_s(j, gh).congruent(rhs, N));
            }
        }
    }
}

TEST_CASE("relation_check verifies the operator identities") {
    for (int d = 1; d <= 3; ++d) {
        auto report = relation_check(d);
        CHECK(report.ok);
        for (const auto& item : report.items) CHECK(item.pass);
    }
    // d = 1: both sides of X0 r_1 = r_1 (X0 + X1) equal [[1,1],[0,0]]
    Mat x0(2, 2), x1(2, 2), r1 = Mat::identity(2);
    x0.at(0, 0) = 1;
    x1.at(0, 1) = 1;
    r1.at(0, 1) = 1;
    Mat expected(2, 2);
    expected.at(0, 0) = 1;
    expected.at(0, 1) = 1;
    CHECK(x0 * r1 == expected);
    CHECK(r1 * (x0 + x1) == expected);
}

TEST_CASE("exp_bound on the canonical representations") {
    ExpBound eb = exp_bound(sj_extension_rep(2, 1), 3);
    CHECK(eb.M == 2);
    CHECK(eb.C == 0);
    ExpBound et = exp_bound(trivial_rep(2), 3);
    CHECK(et.M == 1);
    CHECK(et.C == 0);
}

TEST_CASE("the tail bound index dominates the observed convergence index") {
    PadicParams pp(3, 1);
    int N = 12;
    for (const LieRep& rep : {sj_extension_rep(2, 1), logchi_extension_rep(2),
                              standard_rep(2, Poly::x_minus(Rat(2)))}) {
        ExpBound eb = exp_bound(rep, pp.p);
        int n0 = exp_truncation_index(eb, pp, rep.d(), N);
        // element at the edge of the domain: X = 2p^c X_0 + sum X_j
        Mat x = rep.action(0) * Rat(pp.two_pc());
        for (int j = 1; j <= rep.d(); ++j) x = x + rep.action(j);
        Mat term = Mat::identity(rep.dim());
        int last_nonzero = 0;
        for (int n = 1; n < n0 + 12; ++n) {
            term = term * x * Rat(1, n);
            bool vanishes = true;
            for (std::size_t r = 0; r < term.rows() && vanishes; ++r)
                for (std::size_t c = 0; c < term.cols() && vanishes; ++c)
                    if (term.at(r, c) != 0 && valuation(term.at(r, c), pp.p) < N)
                        vanishes = false;
            if (!vanishes) last_nonzero = n;
        }
        CHECK(n0 >= last_nonzero + 1);
    }
}

TEST_CASE("v_functor: trivial representation acts trivially") {
    Rng rng(439);
    PadicParams pp(5, 1);
    int d = 2, N = 10;
    for (int trial = 0; trial < 5; ++trial) {
        GroupElement g = random_group_element(rng, pp, d, N);
        PadicMat a = v_functor(trivial_rep(d), g, N);
        CHECK(padic_mat_congruent(a, padic_identity_mat(pp.p, 1, N), N));
    }
}

TEST_CASE("v_functor on K[X0]/(X0-1) is the scalar exponential") {
    PadicParams pp(3, 1);
    int d = 1, N = 12;
    PadicScalar t(pp.p, N, 12), zero(pp.p, N, 0);
    GroupElement g = mat_exp(AlgebraElement(pp, t, {zero}));
    PadicMat a = v_functor(standard_rep(d, Poly::x_minus(Rat(1))), g, N);
    CHECK(a[0][0].congruent(PadicScalar(pp.p, N, padic_exp_int(pp.p, 12, N)), N));
}

TEST_CASE("v_functor on the s_j extension sends r_j to the unipotent matrix") {
    PadicParams pp(3, 1);
    int d = 2, N = 12;
    GroupElement rj = generator_r(pp, d, 1, N);
    PadicMat a = v_functor(sj_extension_rep(d, 1), rj, N);
    PadicMat expected = padic_identity_mat(pp.p, 2, N);
    expected[0][1] = PadicScalar(pp.p, N, 1);
    CHECK(padic_mat_congruent(a, expected, N));
}

TEST_CASE("v_functor: rejections") {
    PadicParams pp(3, 1);
    GroupElement g = group_identity(pp, 1, 8);
    CHECK_THROWS_WITH(v_functor(standard_rep(1, Poly::x_minus(Rat(1, 3))), g, 8),
                      "v_functor: non-integral entries");
    CHECK_THROWS(v_functor(standard_rep(1, Poly::x_minus(Rat(1, 2))), g, 8));
    CHECK_THROWS(v_functor(standard_rep(1, Poly{Rat(-2), Rat(0), Rat(1)}), g, 8));
}

TEST_CASE("v_functor respects the group law") {
    Rng rng(443);
    PadicParams pp(3, 1);
    int N = 14;
    for (int d : {1, 2}) {
        std::vector<LieRep> reps{sj_extension_rep(d, 1), logchi_extension_rep(d)};
        for (int n = -1; n <= 2; ++n) reps.push_back(standard_rep(d, Poly::x_minus(Rat(n))));
        for (const LieRep& rep : reps) {
            GroupElement g = random_group_element(rng, pp, d, N);
            GroupElement h = random_group_element(rng, pp, d, N);
            PadicMat lhs = padic_mat_mul(v_functor(rep, g, N), v_functor(rep, h, N));
            PadicMat rhs = v_functor(rep, group_mul(g, h), N);
            CHECK(padic_mat_congruent(lhs, rhs, N));
        }
    }
}

TEST_CASE("differentiating v_functor recovers the representation matrices") {
    PadicParams pp(3, 1);
    int N = 8;
    for (int d : {1, 2}) {
        std::vector<LieRep> reps{sj_extension_rep(d, 1), logchi_extension_rep(d),
                                 standard_rep(d, Poly::x_minus(Rat(2)))};
        for (const LieRep& rep : reps) {
            GroupAction act = [&](const GroupElement& g, int target) {
                return v_functor(rep, g, target);
            };
            for (int i = 0; i <= d; ++i) {
                PadicMat got = differentiate_one_param(act, i, pp, d, N);
                PadicMat expected;
                for (std::size_t r = 0; r < rep.dim(); ++r) {
                    std::vector<PadicScalar> row;
                    for (std::size_t c = 0; c < rep.dim(); ++c)
                        row.push_back(PadicScalar::from_rat(pp.p, N, rep.action(i).at(r, c)));
                    expected.push_back(std::move(row));
                }
                CHECK(padic_mat_congruent(got, expected, N));
            }
        }
    }
}

TEST_CASE("group extension actions built from the cocycles differentiate to the paper matrices") {
    PadicParams pp(3, 1);
    int d = 2, N = 8;
    GroupAction logchi_act = [](const GroupElement& g, int target) {
        return logchi_group_action(g, target);
    };
    // X_0 differentiates to [[0,1],[0,0]]; the X_j to zero
    PadicMat d0 = differentiate_one_param(logchi_act, 0, pp, d, N);
    CHECK(d0[0][0].congruent(PadicScalar(pp.p, N, 0), N));
    CHECK(d0[0][1].congruent(PadicScalar(pp.p, N, 1), N));
    CHECK(d0[1][0].congruent(PadicScalar(pp.p, N, 0), N));
    CHECK(d0[1][1].congruent(PadicScalar(pp.p, N, 0), N));
    for (int j = 1; j <= d; ++j) {
        PadicMat dj = differentiate_one_param(logchi_act, j, pp, d, N);
        for (auto& row : dj)
            for (auto& e : row) CHECK(e.congruent(PadicScalar(pp.p, N, 0), N));
    }

    for (int j = 1; j <= d; ++j) {
        GroupAction sj_act = [j](const GroupElement& g, int target) {
            return sj_group_action(j, g, target);
        };
        PadicMat dj0 = differentiate_one_param(sj_act, 0, pp, d, N);
        CHECK(dj0[0][0].congruent(PadicScalar(pp.p, N, 1), N));
        CHECK(dj0[0][1].congruent(PadicScalar(pp.p, N, 0), N));
        PadicMat djj = differentiate_one_param(sj_act, j, pp, d, N);
        CHECK(djj[0][0].congruent(PadicScalar(pp.p, N, 0), N));
        CHECK(djj[0][1].congruent(PadicScalar(pp.p, N, 1), N));
        for (int k = 1; k <= d; ++k) {
            if (k == j) continue;
            PadicMat dk = differentiate_one_param(sj_act, k, pp, d, N);
            for (auto& row : dk)
                for (auto& e : row) CHECK(e.congruent(PadicScalar(pp.p, N, 0), N));
        }
    }
}

TEST_CASE("v_functor agrees with the cocycle-built group actions") {
    Rng rng(449);
    PadicParams pp(5, 1);
    int d = 2, N = 10;
    for (int trial = 0; trial < 5; ++trial) {
        GroupElement g = random_group_element(rng, pp, d, N);
        CHECK(padic_mat_congruent(v_functor(logchi_extension_rep(d), g, N),
                                  logchi_group_action(g, N), N));
        for (int j = 1; j <= d; ++j)
            CHECK(padic_mat_congruent(v_functor(sj_extension_rep(d, j), g, N),
                                      sj_group_action(j, g, N), N));
    }
}

TEST_CASE("precision soundness: higher precision truncates to the lower answer") {
    Rng rng(457);
    PadicParams pp(3, 1);
    int d = 2, N = 12;
    Int m = ipow(pp.p, N);
    for (int trial = 0; trial < 5; ++trial) {
        // the same residues read at N and at N+5
        Int ures = 1 + pp.two_pc() * random_int_mod(rng, m);
        Int z0 = random_int_mod(rng, m), z1 = random_int_mod(rng, m);
        GroupElement low(pp, PadicScalar(pp.p, N, ures),
                         {PadicScalar(pp.p, N, z0), PadicScalar(pp.p, N, z1)});
        GroupElement high(pp, PadicScalar(pp.p, N + 5, ures),
                          {PadicScalar(pp.p, N + 5, z0), PadicScalar(pp.p, N + 5, z1)});
        AlgebraElement llow = mat_log(low), lhigh = mat_log(high);
        CHECK(algebra_congruent(lhigh, llow, N));
        LieRep rep = sj_extension_rep(d, 1);
        CHECK(padic_mat_congruent(v_functor(rep, high, N + 5), v_functor(rep, low, N), N));
    }
}

TEST_CASE("p = 2 with c = 2 behind the configuration flag") {
    CHECK_THROWS(PadicParams(2, 1));
    PadicParams pp(2, 2);
    Rng rng(461);
    int d = 1, N = 12;
    for (int trial = 0; trial < 5; ++trial) {
        AlgebraElement x = random_algebra_element(rng, pp, d, N);
        CHECK(algebra_congruent(mat_log(mat_exp(x)), x, N - 1));
        GroupElement g = random_group_element(rng, pp, d, N);
        GroupElement h = random_group_element(rng, pp, d, N);
        PadicMat lhs = padic_mat_mul(group_matrix(g), group_matrix(h));
        CHECK(padic_mat_congruent(lhs, group_matrix(group_mul(g, h)), N));
    }
}
