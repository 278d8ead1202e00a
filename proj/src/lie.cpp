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

#include "liecoh/lie.hpp"

#include <stdexcept>

namespace liecoh {

std::vector<int> subalgebra_basis(Subalgebra s, int d) {
    std::vector<int> out;
    switch (s) {
        case Subalgebra::full:
            for (int i = 0; i <= d; ++i) out.push_back(i);
            break;
        case Subalgebra::geom:
            for (int i = 1; i <= d; ++i) out.push_back(i);
            break;
        case Subalgebra::cycl:
            out.push_back(0);
            break;
    }
    return out;
}

std::optional<BracketTerm> bracket(int i, int j) {
    if (i == 0 && j >= 1) return BracketTerm{+1, j};
    if (j == 0 && i >= 1) return BracketTerm{-1, i};
    return std::nullopt;
}

LieRep::LieRep(int d, std::vector<Mat> action) : d_(d), action_(std::move(action)) {
    if (d_ < 1) throw std::invalid_argument("LieRep: d must be positive");
    if (action_.size() != static_cast<std::size_t>(d_ + 1))
        throw std::invalid_argument("LieRep: expected d+1 action matrices");
    dim_ = action_[0].rows();
    for (const Mat& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("LieRep: action matrices must be square of equal size");
}

Mat companion_matrix(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    std::size_t n = p.degree();
    Mat c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c.at(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(static_cast<int>(i));
    return c;
}

LieRep standard_rep(int d, const Poly& p) {
    std::vector<Mat> action;
    action.push_back(companion_matrix(p));
    for (int j = 1; j <= d; ++j) action.push_back(Mat::zero(p.degree(), p.degree()));
    return LieRep(d, std::move(action));
}

LieRep trivial_rep(int d) { return standard_rep(d, Poly::x()); }

LieRep zero_rep(int d) {
    std::vector<Mat> action(d + 1, Mat::zero(0, 0));
    return LieRep(d, std::move(action));
}

LieRep tensor(const LieRep& a, const LieRep& b) {
    if (a.d() != b.d()) throw std::invalid_argument("tensor: representations of different g_d");
    std::vector<Mat> action;
    Mat ia = Mat::identity(a.dim()), ib = Mat::identity(b.dim());
    for (int i = 0; i <= a.d(); ++i)
        action.push_back(kron(a.action(i), ib) + kron(ia, b.action(i)));
    return LieRep(a.d(), std::move(action));
}

LieRep dual(const LieRep& a) {
    std::vector<Mat> action;
    for (int i = 0; i <= a.d(); ++i) action.push_back(-a.action(i).transpose());
    return LieRep(a.d(), std::move(action));
}

LieRep direct_sum(const LieRep& a, const LieRep& b) {
    if (a.d() != b.d()) throw std::invalid_argument("direct_sum: representations of different g_d");
    std::vector<Mat> action;
    for (int i = 0; i <= a.d(); ++i) action.push_back(direct_sum_mat(a.action(i), b.action(i)));
    return LieRep(a.d(), std::move(action));
}

LieRep hom_rep(const LieRep& a, const LieRep& b) { return tensor(dual(a), b); }

LieRep conjugate(const LieRep& rep, const Mat& s) {
    auto si = inverse(s);
    if (!si) throw std::invalid_argument("conjugate: matrix not invertible");
    std::vector<Mat> action;
    for (int i = 0; i <= rep.d(); ++i) action.push_back(*si * rep.action(i) * s);
    return LieRep(rep.d(), std::move(action));
}

LieRep logchi_extension_rep(int d) {
    std::vector<Mat> action(d + 1, Mat::zero(2, 2));
    action[0].at(0, 1) = 1;
    return LieRep(d, std::move(action));
}

LieRep sj_extension_rep(int d, int j) {
    if (j < 1 || j > d) throw std::invalid_argument("sj_extension_rep: j out of range");
    std::vector<Mat> action(d + 1, Mat::zero(2, 2));
    action[0].at(0, 0) = 1;
    action[j].at(0, 1) = 1;
    return LieRep(d, std::move(action));
}

ValidationReport validate(const LieRep& rep) {
    ValidationReport report{true, {}};
    for (int i = 0; i <= rep.d(); ++i)
        for (int j = i; j <= rep.d(); ++j) {
            Mat lhs = commutator(rep.action(i), rep.action(j));
            Mat rhs = Mat::zero(rep.dim(), rep.dim());
            if (auto t = bracket(i, j)) rhs = rep.action(t->index) * Rat(t->coeff);
            bool pass = lhs == rhs;
            report.checks.push_back({i, j, pass});
            if (!pass) report.ok = false;
        }
    return report;
}

bool intertwines(const RepMorphism& m) {
    if (m.source.d() != m.target.d()) return false;
    for (int i = 0; i <= m.source.d(); ++i)
        if (!(m.matrix * m.source.action(i) == m.target.action(i) * m.matrix)) return false;
    return true;
}

std::vector<Mat> intertwiner_space(const LieRep& source, const LieRep& target) {
    if (source.d() != target.d())
        throw std::invalid_argument("intertwiner_space: representations of different g_d");
    std::size_t na = source.dim(), nb = target.dim();
    // f is nb x na; vec(f) stacks columns, index j*nb + i.
    // The condition target.action[k] f - f source.action[k] = 0 becomes
    // (I_a (x) B_k - A_k^T (x) I_b) vec(f) = 0.
    Mat cond(0, na * nb);
    for (int k = 0; k <= source.d(); ++k) {
        Mat lk = kron(Mat::identity(na), target.action(k)) -
                 kron(source.action(k).transpose(), Mat::identity(nb));
        Mat stacked(cond.rows() + lk.rows(), na * nb);
        for (std::size_t i = 0; i < cond.rows(); ++i)
            for (std::size_t j = 0; j < cond.cols(); ++j) stacked.at(i, j) = cond.at(i, j);
        for (std::size_t i = 0; i < lk.rows(); ++i)
            for (std::size_t j = 0; j < lk.cols(); ++j) stacked.at(cond.rows() + i, j) = lk.at(i, j);
        cond = std::move(stacked);
    }
    auto rk = rank_kernel(cond);
    std::vector<Mat> basis;
    for (std::size_t col = 0; col < rk.kernel.cols(); ++col) {
        Mat f(nb, na);
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t i = 0; i < nb; ++i) f.at(i, j) = rk.kernel.at(j * nb + i, col);
        basis.push_back(std::move(f));
    }
    return basis;
}

Mat tensor_swap(std::size_t dim_a, std::size_t dim_b) {
    Mat t(dim_a * dim_b, dim_a * dim_b);
    for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t k = 0; k < dim_b; ++k) t.at(k * dim_a + i, i * dim_b + k) = 1;
    return t;
}

}  // namespace liecoh
