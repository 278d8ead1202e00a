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

#include "liecoh/group.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "liecoh/factor.hpp"

namespace liecoh {

PadicParams::PadicParams(Int prime, int cc) : p(std::move(prime)), c(cc) {
    if (p < 2) throw std::invalid_argument("PadicParams: prime must be at least 2");
    if (c < 1) throw std::invalid_argument("PadicParams: c must be positive");
    if (p == 2 && c < 2) throw std::invalid_argument("PadicParams: p = 2 requires c >= 2");
}

namespace {

void check_same(const PadicParams& a, const PadicParams& b, int da, int db) {
    if (a.p != b.p || a.c != b.c) throw std::invalid_argument("p-adic parameter mismatch");
    if (da != db) throw std::invalid_argument("dimension mismatch");
}

/* The defining (d+1)-dimensional representation of g: X_0 = E_00, X_j = E_0j. */
LieRep defining_rep(int d) {
    std::vector<Mat> action(d + 1, Mat::zero(d + 1, d + 1));
    action[0].at(0, 0) = 1;
    for (int j = 1; j <= d; ++j) action[j].at(0, j) = 1;
    return LieRep(d, std::move(action));
}

Mat exp_series_rational(const Mat& x, int n0) {
    Mat sum = Mat::identity(x.rows());
    Mat term = Mat::identity(x.rows());
    for (int n = 1; n < n0; ++n) {
        term = term * x * Rat(1, n);
        sum = sum + term;
    }
    return sum;
}

Mat log_series_rational(const Mat& g, int n0) {
    Mat w = g - Mat::identity(g.rows());
    Mat sum = Mat::zero(g.rows(), g.rows());
    Mat power = Mat::identity(g.rows());
    for (int n = 1; n < n0; ++n) {
        power = power * w;
        sum = sum + power * Rat(n % 2 == 1 ? 1 : -1, n);
    }
    return sum;
}

PadicMat reduce_mat(const Mat& m, const Int& p, int prec) {
    PadicMat out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<PadicScalar> row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(PadicScalar::from_rat(p, prec, m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

int log_truncation_index(const PadicParams& pp, int N) {
    Rat slope = Rat(pp.vc()) - Rat(1, pp.p - 1);
    for (int n = 1;; ++n)
        if (Rat(n - 1) * slope >= N) return n;
}

void check_group_invariant(const PadicParams& pp, const PadicScalar& u) {
    PadicScalar um1 = u - PadicScalar(pp.p, u.prec(), 1);
    if (um1.valuation_floor() < std::min(pp.vc(), u.prec()))
        throw std::invalid_argument("group element: u is not in 1 + 2p^c Z_p");
}

}  // namespace

GroupElement::GroupElement(PadicParams pp, PadicScalar uu, std::vector<PadicScalar> zz)
    : params(std::move(pp)), u(std::move(uu)), z(std::move(zz)) {
    check_group_invariant(params, u);
}

int GroupElement::min_prec() const {
    int m = u.prec();
    for (const PadicScalar& s : z) m = std::min(m, s.prec());
    return m;
}

AlgebraElement::AlgebraElement(PadicParams pp, PadicScalar aa, std::vector<PadicScalar> bb)
    : params(std::move(pp)), a(std::move(aa)), b(std::move(bb)) {}

int AlgebraElement::min_prec() const {
    int m = a.prec();
    for (const PadicScalar& s : b) m = std::min(m, s.prec());
    return m;
}

GroupElement group_identity(const PadicParams& pp, int d, int prec) {
    return GroupElement(pp, PadicScalar(pp.p, prec, 1),
                        std::vector<PadicScalar>(d, PadicScalar(pp.p, prec, 0)));
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
    check_same(g.params, h.params, g.d(), h.d());
    std::vector<PadicScalar> z;
    for (int j = 0; j < g.d(); ++j) z.push_back(g.z[j] + g.u * h.z[j]);
    return GroupElement(g.params, g.u * h.u, std::move(z));
}

GroupElement group_inv(const GroupElement& g) {
    PadicScalar ui = g.u.unit_inverse();
    std::vector<PadicScalar> z;
    for (int j = 0; j < g.d(); ++j) z.push_back(-(ui * g.z[j]));
    return GroupElement(g.params, ui, std::move(z));
}

PadicMat group_matrix(const GroupElement& g) {
    int n = g.d() + 1;
    PadicMat m = padic_identity_mat(g.params.p, n, g.min_prec());
    m[0][0] = g.u.truncated(g.min_prec());
    for (int j = 0; j < g.d(); ++j) m[0][j + 1] = g.z[j].truncated(g.min_prec());
    return m;
}

PadicMat algebra_matrix(const AlgebraElement& x) {
    int n = x.d() + 1;
    int prec = x.min_prec();
    PadicMat m;
    for (int i = 0; i < n; ++i)
        m.push_back(std::vector<PadicScalar>(n, PadicScalar(x.params.p, prec, 0)));
    m[0][0] = x.a.truncated(prec);
    for (int j = 0; j < x.d(); ++j) m[0][j + 1] = x.b[j].truncated(prec);
    return m;
}

AlgebraElement algebra_bracket(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x.params, y.params, x.d(), y.d());
    std::vector<PadicScalar> b;
    for (int j = 0; j < x.d(); ++j) b.push_back(x.a * y.b[j] - y.a * x.b[j]);
    PadicScalar zero(x.params.p, std::min(x.min_prec(), y.min_prec()), 0);
    return AlgebraElement(x.params, std::move(zero), std::move(b));
}

GroupElement generator_r(const PadicParams& pp, int d, int j, int prec) {
    if (j == 0)
        return mat_exp(AlgebraElement(pp, PadicScalar(pp.p, prec, pp.two_pc()),
                                      std::vector<PadicScalar>(d, PadicScalar(pp.p, prec, 0))));
    std::vector<PadicScalar> z(d, PadicScalar(pp.p, prec, 0));
    z[j - 1] = PadicScalar(pp.p, prec, 1);
    return GroupElement(pp, PadicScalar(pp.p, prec, 1), std::move(z));
}

AlgebraElement algebra_x(const PadicParams& pp, int d, int i, int prec) {
    PadicScalar a(pp.p, prec, i == 0 ? 1 : 0);
    std::vector<PadicScalar> b(d, PadicScalar(pp.p, prec, 0));
    if (i >= 1) b[i - 1] = PadicScalar(pp.p, prec, 1);
    return AlgebraElement(pp, std::move(a), std::move(b));
}

Mat jordan_nilpotent_part(const Mat& a0) {
    Poly chi = char_poly(a0);
    auto roots = integer_roots(chi);
    std::size_t total = 0;
    for (const auto& [r, m] : roots) total += m;
    if (total != a0.rows())
        throw std::invalid_argument("Jordan decomposition needs an integral spectrum");
    if (roots.size() <= 1) {
        Rat n = roots.empty() ? Rat(0) : Rat(roots[0].first);
        return a0 - Mat::identity(a0.rows()) * n;
    }
    Mat semisimple = Mat::zero(a0.rows(), a0.rows());
    for (const auto& [root, mult] : roots) {
        Poly mi = poly_pow(Poly::x_minus(Rat(root)), mult);
        Poly qi = poly_divrem(chi, mi).quot;
        PolyExtGcd e = poly_extgcd(qi, mi);        // e.a * qi + e.b * mi = 1
        Poly ei = poly_divrem(e.a * qi, chi).rem;  // idempotent mod chi
        semisimple = semisimple + mat_apply(ei, a0) * Rat(root);
    }
    return a0 - semisimple;
}

ExpBound exp_bound(const LieRep& rep, const Int& p) {
    std::size_t n = rep.dim();
    Mat nil = jordan_nilpotent_part(rep.action(0));
    int M = 1;
    while (true) {
        bool ok = nil.pow(M).is_zero();
        for (int j = 1; j <= rep.d() && ok; ++j) ok = rep.action(j).pow(M).is_zero();
        if (ok) break;
        if (++M > static_cast<int>(n) + 1)
            throw std::invalid_argument("geometric action is not nilpotent");
    }

    // valuation of the product set X_1^{j_1} ... X_d^{j_d} (X_0^nil)^{j_0}
    std::vector<std::vector<Mat>> powers;  // powers[j][e]: j = 1..d then nil last
    for (int j = 1; j <= rep.d(); ++j) {
        std::vector<Mat> pw{Mat::identity(n)};
        for (int e = 1; e < M; ++e) pw.push_back(pw.back() * rep.action(j));
        powers.push_back(std::move(pw));
    }
    {
        std::vector<Mat> pw{Mat::identity(n)};
        for (int e = 1; e < M; ++e) pw.push_back(pw.back() * nil);
        powers.push_back(std::move(pw));
    }

    bool have = false;
    int C = 0;
    std::vector<int> exps(powers.size(), 0);
    while (true) {
        Mat prod = Mat::identity(n);
        for (std::size_t j = 0; j < powers.size(); ++j) prod = prod * powers[j][exps[j]];
        if (!prod.is_zero()) {
            int v = INT_MAX;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    if (prod.at(i, k) != 0) v = std::min(v, valuation(prod.at(i, k), p));
            if (!have || v < C) C = v;
            have = true;
        }
        std::size_t pos = 0;
        while (pos < exps.size() && ++exps[pos] == M) exps[pos++] = 0;
        if (pos == exps.size()) break;
    }
    if (!have) throw std::logic_error("empty product set");
    return {M, C};
}

int exp_truncation_index(const ExpBound& eb, const PadicParams& pp, int d, int N) {
    Rat pm1(pp.p - 1);
    for (int n = 1;; ++n)
        if (Rat(eb.C) + Rat(n - d * eb.M) * pp.vc() - Rat(n - 1) / pm1 >= N) return n;
}

GroupElement mat_exp(const AlgebraElement& x) {
    const PadicParams& pp = x.params;
    if (x.a.valuation_floor() < std::min(pp.vc(), x.a.prec()))
        throw std::domain_error("outside exp domain");
    int d = x.d();
    int N = x.min_prec();
    Mat xm(d + 1, d + 1);
    xm.at(0, 0) = Rat(x.a.residue());
    for (int j = 0; j < d; ++j) xm.at(0, j + 1) = Rat(x.b[j].residue());
    ExpBound eb = exp_bound(defining_rep(d), pp.p);
    int n0 = exp_truncation_index(eb, pp, d, N);
    Mat s = exp_series_rational(xm, n0);
    PadicScalar u = PadicScalar::from_rat(pp.p, N, s.at(0, 0));
    std::vector<PadicScalar> z;
    for (int j = 0; j < d; ++j) z.push_back(PadicScalar::from_rat(pp.p, N, s.at(0, j + 1)));
    return GroupElement(pp, std::move(u), std::move(z));
}

AlgebraElement mat_log(const GroupElement& g) {
    const PadicParams& pp = g.params;
    int d = g.d();
    int N = g.min_prec();
    Mat gm = Mat::identity(d + 1);
    gm.at(0, 0) = Rat(g.u.residue());
    for (int j = 0; j < d; ++j) gm.at(0, j + 1) = Rat(g.z[j].residue());
    int n0 = log_truncation_index(pp, N);
    Mat l = log_series_rational(gm, n0);
    PadicScalar a = PadicScalar::from_rat(pp.p, N, l.at(0, 0));
    std::vector<PadicScalar> b;
    for (int j = 0; j < d; ++j) b.push_back(PadicScalar::from_rat(pp.p, N, l.at(0, j + 1)));
    return AlgebraElement(pp, std::move(a), std::move(b));
}

PadicScalar cocycle_logchi(const GroupElement& g) {
    return PadicScalar(g.params.p, g.u.prec(),
                       padic_log_int(g.params.p, g.u.residue(), g.u.prec()));
}

PadicScalar cocycle_s(int j, const GroupElement& g) {
    if (j < 1 || j > g.d()) throw std::invalid_argument("cocycle_s: index out of range");
    return g.z[j - 1];
}

PadicMat v_functor(const LieRep& rep, const GroupElement& g, int N) {
    if (rep.d() != g.d()) throw std::invalid_argument("v_functor: dimension mismatch");
    if (!validate(rep).ok) throw std::invalid_argument("v_functor: invalid representation");
    const PadicParams& pp = g.params;
    std::size_t n = rep.dim();
    for (int i = 0; i <= rep.d(); ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (rep.action(i).at(r, c) != 0 &&
                    valuation(rep.action(i).at(r, c), pp.p) < 0)
                    throw std::invalid_argument("v_functor: non-integral entries");
    if (n == 0) return {};

    ExpBound eb = exp_bound(rep, pp.p);  // also rejects non-integral spectrum
    int n0 = exp_truncation_index(eb, pp, rep.d(), N);
    int slack = factorial_valuation(pp.p, n0 > 1 ? n0 - 1 : 1);
    int working = N + slack;

    // log g on the residue lifts, good mod p^working
    Mat gm = Mat::identity(rep.d() + 1);
    gm.at(0, 0) = Rat(g.u.residue());
    for (int j = 0; j < rep.d(); ++j) gm.at(0, j + 1) = Rat(g.z[j].residue());
    Mat l = log_series_rational(gm, log_truncation_index(pp, working));

    Mat x = Mat::zero(n, n);
    x = x + rep.action(0) * Rat(rat_mod(l.at(0, 0), pp.p, working));
    for (int j = 1; j <= rep.d(); ++j)
        x = x + rep.action(j) * Rat(rat_mod(l.at(0, j), pp.p, working));

    Mat s = exp_series_rational(x, n0);
    return reduce_mat(s, pp.p, std::min(N, g.min_prec()));
}

RelationReport relation_check(int d) {
    RelationReport report{{}, true};
    auto push = [&](const std::string& name, bool pass) {
        report.items.push_back({name, pass});
        if (!pass) report.ok = false;
    };
    int n = d + 1;
    std::vector<Mat> x(d + 1, Mat::zero(n, n));
    x[0].at(0, 0) = 1;
    for (int j = 1; j <= d; ++j) x[j].at(0, j) = 1;
    std::vector<Mat> r(d + 1, Mat::identity(n));
    for (int j = 1; j <= d; ++j) r[j].at(0, j) = 1;

    for (int j = 1; j <= d; ++j)
        push("X0 r_" + std::to_string(j) + " = r_" + std::to_string(j) + " (X0 + X_j)",
             x[0] * r[j] == r[j] * (x[0] + x[j]));
    for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k)
            push("X_" + std::to_string(j) + " commutes with r_" + std::to_string(k),
                 x[j] * r[k] == r[k] * x[j]);
    for (const Rat& u : {Rat(7), Rat(1, 7), Rat(5, 3)}) {
        Mat gamma = Mat::identity(n);
        gamma.at(0, 0) = u;
        push("X0 commutes with gamma(u=" + rat_str(u) + ")",
             x[0] * gamma == gamma * x[0]);
        for (int j = 1; j <= d; ++j)
            push("X_" + std::to_string(j) + " gamma = chi(gamma)^{-1} gamma X_" +
                     std::to_string(j) + " (u=" + rat_str(u) + ")",
                 x[j] * gamma == gamma * x[j] * (Rat(1) / u));
    }
    return report;
}

PadicMat logchi_group_action(const GroupElement& g, int N) {
    PadicMat m = padic_identity_mat(g.params.p, 2, N);
    m[0][1] = PadicScalar(g.params.p, N, padic_log_int(g.params.p, g.u.residue(), N));
    return m;
}

PadicMat sj_group_action(int j, const GroupElement& g, int N) {
    if (j < 1 || j > g.d()) throw std::invalid_argument("sj_group_action: index out of range");
    PadicMat m = padic_identity_mat(g.params.p, 2, N);
    m[0][0] = PadicScalar(g.params.p, N, g.u.residue());
    m[0][1] = PadicScalar(g.params.p, N, g.z[j - 1].residue());
    return m;
}

PadicMat differentiate_one_param(const GroupAction& act, int i, const PadicParams& pp,
                                 int d, int N) {
    int k = std::max(N + 1 + pp.v2(), pp.vc());
    Int t = ipow(pp.p, k);
    int elem_prec = N + k + 2;
    PadicScalar zero(pp.p, elem_prec, 0);
    PadicScalar tval(pp.p, elem_prec, t);
    AlgebraElement x(pp, i == 0 ? tval : zero,
                     std::vector<PadicScalar>(d, zero));
    if (i >= 1) x.b[i - 1] = tval;
    GroupElement gt = mat_exp(x);
    PadicMat a = act(gt, N + k + 1);
    PadicMat out;
    for (std::size_t r = 0; r < a.size(); ++r) {
        std::vector<PadicScalar> row;
        for (std::size_t c = 0; c < a[r].size(); ++c) {
            Int raw = a[r][c].residue() - (r == c ? 1 : 0);
            raw = mod_reduce(raw, ipow(pp.p, N + k));
            if (raw % t != 0)
                throw std::logic_error("one-parameter action is not tangent to the identity");
            row.push_back(PadicScalar(pp.p, N, raw / t));
        }
        out.push_back(std::move(row));
    }
    return out;
}

PadicMat padic_mat_mul(const PadicMat& a, const PadicMat& b) {
    std::size_t n = a.size(), m = b[0].size(), inner = b.size();
    PadicMat out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<PadicScalar> row;
        for (std::size_t j = 0; j < m; ++j) {
            PadicScalar acc = a[i][0] * b[0][j];
            for (std::size_t k = 1; k < inner; ++k) acc = acc + a[i][k] * b[k][j];
            row.push_back(std::move(acc));
        }
        out.push_back(std::move(row));
    }
    return out;
}

PadicMat padic_identity_mat(const Int& p, int n, int prec) {
    PadicMat out;
    for (int i = 0; i < n; ++i) {
        std::vector<PadicScalar> row(n, PadicScalar(p, prec, 0));
        row[i] = PadicScalar(p, prec, 1);
        out.push_back(std::move(row));
    }
    return out;
}

bool padic_mat_congruent(const PadicMat& a, const PadicMat& b, int digits) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!a[i][j].congruent(b[i][j], digits)) return false;
    }
    return true;
}

}  // namespace liecoh
