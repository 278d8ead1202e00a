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

#include "liecoh/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace liecoh {

std::vector<std::size_t> rref_inplace(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const Mat& m) {
    Mat c = m;
    return rref_inplace(c).size();
}

RankKernel rank_kernel(const Mat& m) {
    Mat r = m;
    std::vector<std::size_t> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::size_t k = m.cols() - pivots.size();
    Mat kernel(m.cols(), k);
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        kernel.at(f, out) = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            kernel.at(pivots[pr], out) = -r.at(pr, f);
        ++out;
    }
    return {pivots.size(), std::move(kernel)};
}

std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) return std::nullopt;
    Mat aug = hstack(m, Mat::identity(m.rows()));
    auto pivots = rref_inplace(aug);
    if (pivots.size() != m.rows()) return std::nullopt;
    Mat inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = aug.at(i, m.cols() + j);
    return inv;
}

std::optional<Mat> solve_in_column_span(const Mat& z, const Mat& y) {
    if (z.rows() != y.rows()) throw std::invalid_argument("solve: row mismatch");
    Mat aug = hstack(z, y);
    auto pivots = rref_inplace(aug);
    // any pivot beyond z's columns means that column of y is not in the span
    for (std::size_t c : pivots)
        if (c >= z.cols()) return std::nullopt;
    Mat x(z.cols(), y.cols());
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        for (std::size_t j = 0; j < y.cols(); ++j) x.at(pivots[pr], j) = aug.at(pr, z.cols() + j);
    return x;
}

SpanExtension extend_column_span(const Mat& base, const Mat& y) {
    // column echelon sweep over [base | y], keeping the y-columns that add rank
    struct EchCol {
        std::vector<Rat> v;
        std::size_t pivot;
    };
    std::vector<EchCol> ech;
    std::size_t rows = y.rows();
    auto reduce = [&](std::vector<Rat> v) -> std::pair<std::vector<Rat>, std::size_t> {
        for (const EchCol& e : ech) {
            if (v[e.pivot] == 0) continue;
            Rat f = v[e.pivot];
            for (std::size_t i = 0; i < rows; ++i) v[i] -= f * e.v[i];
        }
        std::size_t p = 0;
        while (p < rows && v[p] == 0) ++p;
        if (p < rows) {
            Rat inv = Rat(1) / v[p];
            for (std::size_t i = 0; i < rows; ++i) v[i] *= inv;
        }
        return {std::move(v), p};
    };
    for (std::size_t j = 0; j < base.cols(); ++j) {
        auto [v, p] = reduce(base.col(j));
        if (p < rows) ech.push_back({std::move(v), p});
    }
    SpanExtension ext;
    std::vector<std::vector<Rat>> picked_cols;
    for (std::size_t j = 0; j < y.cols(); ++j) {
        auto [v, p] = reduce(y.col(j));
        if (p < rows) {
            ech.push_back({v, p});
            picked_cols.push_back(std::move(v));
            ext.picked.push_back(j);
        }
    }
    ext.reduced = Mat(rows, picked_cols.size());
    for (std::size_t j = 0; j < picked_cols.size(); ++j) ext.reduced.set_col(j, picked_cols[j]);
    return ext;
}

std::size_t added_rank(const Mat& a, const Mat& b) {
    return rank(hstack(a, b)) - rank(a);
}

Poly char_poly(const Mat& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    std::size_t n = a.rows();
    // Faddeev-LeVerrier: exact over Q
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    Mat m = Mat::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        m = a * m;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
        c[n - k] = -tr / Rat(Int(k));
    }
    return Poly(std::move(c));
}

}  // namespace liecoh
