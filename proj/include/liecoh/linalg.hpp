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

#ifndef LIECOH_LINALG_HPP
#define LIECOH_LINALG_HPP

#include <optional>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/poly.hpp"

namespace liecoh {

/* Reduced row echelon form; returns the pivot columns (ascending; pivots
 * are chosen scanning columns left to right). */
std::vector<std::size_t> rref_inplace(Mat& m);

std::size_t rank(const Mat& m);

struct RankKernel {
    std::size_t rank = 0;
    Mat kernel;  // cols x k, columns form the kernel basis
};

/* Kernel basis in reduced echelon form: one column per free column of the
 * RREF, carrying 1 at its own free index and 0 at the other free indices.
 * Deterministic for a given input. */
RankKernel rank_kernel(const Mat& m);

std::optional<Mat> inverse(const Mat& m);

/* Solve Z * X = Y where Z has full column rank; returns nullopt when some
 * column of Y is outside the column span of Z. */
std::optional<Mat> solve_in_column_span(const Mat& z, const Mat& y);

/* Columns of y that extend the column space of base; used for quotient-space
 * representatives. Returns the reduced new columns and their indices in y. */
struct SpanExtension {
    Mat reduced;                      // columns independent modulo base
    std::vector<std::size_t> picked;  // indices into y's columns
};
SpanExtension extend_column_span(const Mat& base, const Mat& y);

/* rank of [a | b] - rank of a, i.e. the dimension b adds to a's span. */
std::size_t added_rank(const Mat& a, const Mat& b);

/* Characteristic polynomial (monic, degree n) via Faddeev-LeVerrier. */
Poly char_poly(const Mat& a);

}  // namespace liecoh

#endif
