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

#include "liecoh/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "liecoh/factor.hpp"

namespace liecoh {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<std::vector<int>> wedge_basis(int m, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > m) return out;
    std::vector<int> w(q);
    for (int i = 0; i < q; ++i) w[i] = i;
    while (true) {
        out.push_back(w);
        int i = q - 1;
        while (i >= 0 && w[i] == m - q + i) --i;
        if (i < 0) break;
        ++w[i];
        for (int j = i + 1; j < q; ++j) w[j] = w[j - 1] + 1;
    }
    return out;
}

std::size_t wedge_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& w) {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || *it != w) throw std::logic_error("wedge not found");
    return static_cast<std::size_t>(it - basis.begin());
}

Mat cochain_to_vec(const Cochain& f) {
    std::size_t n = f.rep.dim(), w = f.coeffs.cols();
    Mat v(n * w, 1);
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t i = 0; i < n; ++i) v.at(j * n + i, 0) = f.coeffs.at(i, j);
    return v;
}

Cochain cochain_from_vec(const LieRep& rep, Subalgebra sub, int q, const Mat& colvec) {
    int m = static_cast<int>(subalgebra_basis(sub, rep.d()).size());
    std::size_t n = rep.dim(), w = binomial(m, q);
    if (colvec.rows() != n * w || colvec.cols() != 1)
        throw std::invalid_argument("cochain_from_vec: wrong length");
    Mat coeffs(n, w);
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t i = 0; i < n; ++i) coeffs.at(i, j) = colvec.at(j * n + i, 0);
    return {rep, sub, q, std::move(coeffs)};
}

Mat ce_differential(const LieRep& rep, Subalgebra sub, int q) {
    std::vector<int> basis = subalgebra_basis(sub, rep.d());
    int m = static_cast<int>(basis.size());
    if (q < 0 || q > m) throw std::invalid_argument("ce_differential: degree out of range");
    std::size_t n = rep.dim();
    auto src = wedge_basis(m, q);
    auto dst = wedge_basis(m, q + 1);
    Mat dmat(n * dst.size(), n * src.size());

    auto add_block = [&](std::size_t ws, std::size_t wt, const Mat& block) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) dmat.at(ws * n + i, wt * n + j) += block.at(i, j);
    };
    auto add_scalar_block = [&](std::size_t ws, std::size_t wt, const Rat& s) {
        for (std::size_t i = 0; i < n; ++i) dmat.at(ws * n + i, wt * n + i) += s;
    };

    for (std::size_t ws = 0; ws < dst.size(); ++ws) {
        const std::vector<int>& s = dst[ws];
        // action sum: (-1)^a X_{s[a]} f(s minus a)
        for (int a = 0; a <= q; ++a) {
            std::vector<int> t;
            for (int x = 0; x <= q; ++x)
                if (x != a) t.push_back(s[x]);
            Rat sign((a % 2 == 0) ? 1 : -1);
            add_block(ws, wedge_index(src, t), rep.action(basis[s[a]]) * sign);
        }
        // bracket sum: (-1)^{a+b} f([X_{s[a]}, X_{s[b]}] wedge rest)
        for (int a = 0; a <= q; ++a)
            for (int b = a + 1; b <= q; ++b) {
                auto term = bracket(basis[s[a]], basis[s[b]]);
                if (!term) continue;
                int kpos = -1;  // position of the bracket value inside the subalgebra
                for (int x = 0; x < m; ++x)
                    if (basis[x] == term->index) kpos = x;
                if (kpos < 0) throw std::logic_error("subalgebra not closed under bracket");
                std::vector<int> rest;
                bool repeats = false;
                for (int x = 0; x <= q; ++x) {
                    if (x == a || x == b) continue;
                    if (s[x] == kpos) repeats = true;
                    rest.push_back(s[x]);
                }
                if (repeats) continue;
                int smaller = 0;
                for (int v : rest)
                    if (v < kpos) ++smaller;
                std::vector<int> t = rest;
                t.insert(t.begin() + smaller, kpos);
                Rat sign(((a + b) % 2 == 0) ? 1 : -1);
                sign *= Rat(term->coeff);
                if (smaller % 2 == 1) sign = -sign;
                add_scalar_block(ws, wedge_index(src, t), sign);
            }
    }
    return dmat;
}

bool is_cocycle(const Cochain& f) {
    int m = static_cast<int>(subalgebra_basis(f.sub, f.rep.d()).size());
    if (f.degree >= m) return true;  // top degree: the next differential is zero
    Mat d = ce_differential(f.rep, f.sub, f.degree);
    return (d * cochain_to_vec(f)).is_zero();
}

CohomologyReport cohomology(const LieRep& rep, Subalgebra sub) {
    int m = static_cast<int>(subalgebra_basis(sub, rep.d()).size());
    std::size_t n = rep.dim();
    CohomologyReport report;
    Mat prev(n, 0);  // d^{-1}: nothing maps into degree 0
    for (int q = 0; q <= m; ++q) {
        Mat dq = q < m ? ce_differential(rep, sub, q)
                       : Mat::zero(0, n * binomial(m, q));
        Mat cocycles = rank_kernel(dq).kernel;
        SpanExtension reps = extend_column_span(prev, cocycles);
        report.dims.push_back(reps.reduced.cols());
        std::vector<Cochain> basis;
        for (std::size_t j = 0; j < reps.reduced.cols(); ++j) {
            Mat col(reps.reduced.rows(), 1);
            for (std::size_t i = 0; i < reps.reduced.rows(); ++i)
                col.at(i, 0) = reps.reduced.at(i, j);
            basis.push_back(cochain_from_vec(rep, sub, q, col));
        }
        report.cocycle_bases.push_back(std::move(basis));
        prev = std::move(dq);
    }
    return report;
}

std::vector<Cochain> derivations(const LieRep& rep, Subalgebra sub) {
    int m = static_cast<int>(subalgebra_basis(sub, rep.d()).size());
    std::vector<Cochain> out;
    Mat d1 = m >= 1 ? ce_differential(rep, sub, 1)
                    : Mat::zero(0, rep.dim() * binomial(m, 1));
    Mat kernel = rank_kernel(d1).kernel;
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
        Mat col(kernel.rows(), 1);
        for (std::size_t i = 0; i < kernel.rows(); ++i) col.at(i, 0) = kernel.at(i, j);
        out.push_back(cochain_from_vec(rep, sub, 1, col));
    }
    return out;
}

Cochain cup(const Cochain& f, const Cochain& g) {
    if (f.sub != g.sub) throw std::invalid_argument("cup: different subalgebras");
    if (f.rep.d() != g.rep.d()) throw std::invalid_argument("cup: different g_d");
    int m = static_cast<int>(subalgebra_basis(f.sub, f.rep.d()).size());
    int p = f.degree, q = g.degree;
    LieRep prod = tensor(f.rep, g.rep);
    std::size_t nu = f.rep.dim(), nw = g.rep.dim();
    auto out_wedges = wedge_basis(m, p + q);
    Mat coeffs(nu * nw, out_wedges.size());
    auto fw = wedge_basis(m, p);
    auto gw = wedge_basis(m, q);

    // (p,q)-shuffles of each output wedge: choose the p positions fed to f
    for (std::size_t ws = 0; ws < out_wedges.size(); ++ws) {
        const std::vector<int>& s = out_wedges[ws];
        for (const std::vector<int>& pick : wedge_basis(p + q, p)) {
            std::vector<int> left, right;
            std::vector<bool> taken(p + q, false);
            int inversions = 0;
            for (int k = 0; k < p; ++k) {
                left.push_back(s[pick[k]]);
                taken[pick[k]] = true;
                inversions += pick[k] - k;
            }
            for (int x = 0; x < p + q; ++x)
                if (!taken[x]) right.push_back(s[x]);
            Rat sign((inversions % 2 == 0) ? 1 : -1);
            std::size_t fcol = wedge_index(fw, left), gcol = wedge_index(gw, right);
            for (std::size_t i = 0; i < nu; ++i) {
                if (f.coeffs.at(i, fcol) == 0) continue;
                for (std::size_t k = 0; k < nw; ++k)
                    coeffs.at(i * nw + k, ws) +=
                        sign * f.coeffs.at(i, fcol) * g.coeffs.at(k, gcol);
            }
        }
    }
    return {std::move(prod), f.sub, p + q, std::move(coeffs)};
}

Cochain delta0_cochain(int d) {
    LieRep rep = trivial_rep(d);
    Mat coeffs(1, d + 1);
    coeffs.at(0, 0) = 1;  // wedge {X_0} is the first 1-wedge of the full algebra
    return {std::move(rep), Subalgebra::full, 1, std::move(coeffs)};
}

Cochain deltaj_cochain(int d, int j) {
    if (j < 1 || j > d) throw std::invalid_argument("deltaj_cochain: j out of range");
    LieRep rep = standard_rep(d, Poly::x_minus(Rat(1)));
    Mat coeffs(1, d + 1);
    coeffs.at(0, j) = 1;
    return {std::move(rep), Subalgebra::full, 1, std::move(coeffs)};
}

std::size_t caL_expected_dim(int d, const Poly& alpha, int q) {
    if (alpha.degree() == 1 && is_integer(-alpha.coeff(0))) {
        Int n = rat_num(-alpha.coeff(0));
        if (n >= 0 && (Int(q) == n || Int(q) == n + 1))
            return binomial(d, static_cast<std::size_t>(n));
    }
    return 0;
}

CaLTable verify_caL_table(int d, const std::vector<Poly>& alphas, int qmax) {
    CaLTable table{d, {}, true};
    for (const Poly& alpha : alphas) {
        auto report = cohomology(standard_rep(d, alpha), Subalgebra::full);
        for (int q = 0; q <= qmax; ++q) {
            std::size_t computed = q < static_cast<int>(report.dims.size()) ? report.dims[q] : 0;
            std::size_t expected = caL_expected_dim(d, alpha, q);
            bool pass = computed == expected;
            if (!pass) table.all_pass = false;
            table.cells.push_back({alpha, q, computed, expected, pass});
        }
    }
    return table;
}

}  // namespace liecoh
