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

#ifndef LIECOH_TESTS_SUPPORT_HPP
#define LIECOH_TESTS_SUPPORT_HPP

#include <vector>

#include "liecoh/linalg.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/random.hpp"

namespace liecoh::testing {

using liecoh::Rng;
using liecoh::random_invertible;
using liecoh::random_mat;
using liecoh::random_rat;
using liecoh::random_rep;

/* Independent elimination strategy for cross-checking rank_kernel:
 * fraction-free Bareiss row reduction on an integer-scaled copy, kernel by
 * back substitution from the unreduced echelon form. */
struct BareissResult {
    std::size_t rank;
    Mat kernel;
};

inline BareissResult bareiss_rank_kernel(const Mat& input) {
    Int scale = 1;
    for (std::size_t i = 0; i < input.rows(); ++i)
        for (std::size_t j = 0; j < input.cols(); ++j)
            scale = lcm(scale, rat_den(input.at(i, j)));
    std::size_t rows = input.rows(), cols = input.cols();
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Rat v = input.at(i, j) * Rat(scale);
            m[i][j] = rat_num(v);
        }

    std::vector<std::size_t> pivot_cols;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivot_cols.push_back(col);
        ++row;
    }

    std::size_t r = pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    Mat kernel(cols, cols - r);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols);
        v[f] = 1;
        for (std::size_t k = r; k-- > 0;) {
            Rat sum = 0;
            for (std::size_t j = pivot_cols[k] + 1; j < cols; ++j) sum += Rat(m[k][j]) * v[j];
            v[pivot_cols[k]] = -sum / Rat(m[k][pivot_cols[k]]);
        }
        kernel.set_col(out++, v);
    }
    return {r, kernel};
}

/* Same column span: equal dimensions and mutual containment. */
inline bool same_span(const Mat& a, const Mat& b) {
    return rank(a) == rank(b) && added_rank(a, b) == 0 && added_rank(b, a) == 0;
}

/* Columns of b all lie in the column span of a. */
inline bool contained_in_span(const Mat& a, const Mat& b) { return added_rank(a, b) == 0; }

}  // namespace liecoh::testing

#endif
